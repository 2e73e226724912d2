int helper(int value) { return value; }
