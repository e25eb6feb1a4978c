# Tests package for Tangle Shadow Bracket
