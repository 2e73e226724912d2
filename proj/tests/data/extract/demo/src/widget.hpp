namespace ui {
template <class T>
class XMLReaderHandler : public Base<T> {
public:
    XMLReaderHandler() : buffer_(0) {}
    bool isValid() const { return valid_; }
    void setName(const std::string& newName);
private:
    std::vector<int> buffer_;
    bool valid_{false};
    int a, b;
};
}
void ui::XMLReaderHandler::setName(const std::string& newName) { std::string copy = newName; Foo x(3); }
