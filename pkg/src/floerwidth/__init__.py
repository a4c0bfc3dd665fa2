"""floerwidth - Kauffman-state width and Turaev genus of link diagrams."""

__version__ = "0.3.0"
