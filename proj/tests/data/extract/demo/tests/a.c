int shouldNotAppear;
