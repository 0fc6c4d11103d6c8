"""Hilbert-point weights and the Donaldson-Futaki invariant of weight degenerations."""
