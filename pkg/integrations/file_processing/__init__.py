"""
Scenario document readers.
"""

from .processor import FileProcessor, process_file, get_supported_extensions

__all__ = ['FileProcessor', 'process_file', 'get_supported_extensions']
