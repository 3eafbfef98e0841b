"""QBernstein Lab: quaternionic polynomial algebra and the Bernstein inequality"""

__version__ = "1.0.0"
