package a.b;
import java.util.*;
public class Foo extends Bar implements Baz {
    private final List<String> userNames = new ArrayList<>();
    private int count;
    @Override
    public static <T> List<T> findItems(String[] args, final Map<String, Integer> lookupTable) throws IOException {
        for (String s : args) { System.out.println(s); }
        Runnable r = makeRunner(args);
        return null;
    }
    public Foo(int size) { this.count = size; }
}
class FooTest { int z; }
