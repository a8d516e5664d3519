"""
File-format integrations for the GBDT engine.
"""

from .file_processing import FileProcessor, process_file, get_supported_extensions

__all__ = ['FileProcessor', 'process_file', 'get_supported_extensions']
