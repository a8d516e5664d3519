"""
Scenario document reader.

Maps a file suffix to a reader and returns the document text together with
the metadata the scenario parser needs for diagnostics.
"""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Union

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class FileProcessor:
    """Reads YAML and JSON scenario documents as UTF-8 text."""

    def __init__(self):
        self.readers: Dict[str, Callable[[Path], str]] = {
            '.yaml': self._read_utf8,
            '.yml': self._read_utf8,
            '.json': self._read_utf8,
        }

    def _failure(self, path: Path, reason: str) -> Dict[str, Any]:
        logger.warning(f"❌ Cannot read scenario {path.name}: {reason}")
        return {
            'file_path': str(path),
            'file_type': path.suffix.lower() or None,
            'content': None,
            'processed': False,
            'error': reason,
        }

    def process_file(self, file_path: PathLike) -> Dict[str, Any]:
        """
        Read one scenario document.

        Returns a dict with ``file_path``, ``file_type`` (the lower-cased
        suffix), ``content`` and ``processed``; ``error`` explains a failed
        read and ``content`` is then None.
        """
        path = Path(file_path)
        if not path.is_file():
            return self._failure(path, f"File not found: {path}")

        suffix = path.suffix.lower()
        reader = self.readers.get(suffix)
        if reader is None:
            return self._failure(path, f"Unsupported scenario format: {suffix or '(none)'}; "
                                       f"use one of {', '.join(self.get_supported_formats())}")
        try:
            content = reader(path)
        except (OSError, UnicodeDecodeError) as e:
            return self._failure(path, f"Error reading file: {e}")

        logger.info(f"📄 Read scenario {path.name} ({len(content)} characters)")
        return {
            'file_path': str(path),
            'file_type': suffix,
            'content': content,
            'processed': True,
        }

    @staticmethod
    def _read_utf8(path: Path) -> str:
        return path.read_text(encoding='utf-8')

    def get_supported_formats(self) -> list:
        return list(self.readers)

    def is_supported(self, file_path: PathLike) -> bool:
        return Path(file_path).suffix.lower() in self.readers


def process_file(file_path: PathLike) -> Dict[str, Any]:
    """Read a single scenario document with a default processor."""
    return FileProcessor().process_file(file_path)


def get_supported_extensions() -> list:
    return FileProcessor().get_supported_formats()
