"""
Tools package: scenario documents and CSV artifacts.
"""

__all__ = []
