"""Reinforcement-learning scheduling of surrogate models for expensive multi-objective optimization."""

__version__ = "0.1.0"
