"""Write-once cache of graded pieces, in memory and optionally on disk."""

import os
import tempfile
import threading
from collections.abc import Callable
from pathlib import Path

from pydantic import ValidationError

from qtoric.config import settings
from qtoric.logging_config import get_logger
from qtoric.metrics import record_cache_lookup
from qtoric.models.reports import GradedPiece

logger = get_logger(__name__)

CacheKey = tuple[str, int]


class GradedPieceCache:
    """Graded pieces keyed by ``(data digest, degree)``.

    Entries are never replaced once stored. Disk files live under
    ``settings.cache_dir`` (read at lookup time) and are written atomically.
    """

    def __init__(self):
        """Initialize an empty in-memory cache."""
        self._entries: dict[CacheKey, GradedPiece] = {}
        self._lock = threading.Lock()

    def clear(self):
        """Forget the in-memory entries (disk files are kept)."""
        with self._lock:
            self._entries.clear()

    def _path(self, key: CacheKey) -> Path | None:
        if settings.cache_dir is None:
            return None
        digest, degree = key
        return Path(settings.cache_dir) / f"{digest}-{degree}.json"

    def _read_disk(self, key: CacheKey) -> GradedPiece | None:
        path = self._path(key)
        if path is None or not path.exists():
            return None
        try:
            piece = GradedPiece.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as e:
            logger.warning("Ignoring unreadable cache file", path=str(path), error=str(e))
            return None
        if (piece.data_digest, piece.degree) != key:
            logger.warning("Ignoring cache file with mismatched key", path=str(path))
            return None
        return piece

    def _write_disk(self, key: CacheKey, piece: GradedPiece):
        path = self._path(key)
        if path is None or path.exists():
            return
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(piece.model_dump_json())
            if path.exists():
                os.unlink(temp_name)
            else:
                os.replace(temp_name, path)
        except OSError as e:
            logger.warning("Could not write cache file", path=str(path), error=str(e))

    def get_or_compute(self, key: CacheKey, compute: Callable[[], GradedPiece]) -> GradedPiece:
        """Return the cached piece for ``key``, computing and storing it on a miss."""
        with self._lock:
            cached = self._entries.get(key)
        if cached is not None:
            record_cache_lookup("memory_hit")
            return cached

        piece = self._read_disk(key)
        if piece is not None:
            record_cache_lookup("disk_hit")
        else:
            record_cache_lookup("miss")
            piece = compute()
            self._write_disk(key, piece)

        with self._lock:
            return self._entries.setdefault(key, piece)


graded_piece_cache = GradedPieceCache()
