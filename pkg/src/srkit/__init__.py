"""Superregular lower-triangular Toeplitz matrices over finite fields and MDP convolutional codes."""

__version__ = "0.1.0"
