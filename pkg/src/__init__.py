"""Arnold complexity of length-2^n binary words."""
