"""polywang: Wang tile sets compiled into seven translational polyominoes."""

__version__ = "0.1.0"
