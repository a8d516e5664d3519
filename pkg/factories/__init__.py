# Factories package
from .check_factory import CheckFactory

__all__ = ['CheckFactory']
