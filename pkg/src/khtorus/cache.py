"""Content-addressed on-disk cache for computed homology.

Keys hash the canonical diagram text together with the Frobenius spec, the
ring and a code version stamp.  Each entry stores a checksum of its payload;
an entry that fails the checksum is treated as missing.  Every I/O failure is
swallowed and logged so the caller simply recomputes.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

log = logging.getLogger(__name__)

ENV_VAR = "KHTORUS_CACHE_DIR"
# bump whenever grading or sign conventions change
CODE_VERSION = "khtorus-0.1.0/conventions-1"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "khtorus"


def _sha(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def cache_key(canonical: str, spec: str, ring: str, version: str = CODE_VERSION) -> str:
    payload = json.dumps([canonical, spec.upper(), ring.upper(), version],
                         separators=(",", ":"))
    return _sha(payload)


@dataclass(frozen=True)
class CacheEntry:
    key: str
    value: str

    @property
    def checksum(self) -> str:
        return _sha(self.value)

    def dumps(self) -> str:
        return json.dumps({"key": self.key, "checksum": self.checksum, "value": self.value},
                          sort_keys=True)


class ResultCache:
    def __init__(self, root: Optional[Path | str] = None, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled

    def path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        p = self.path(key)
        try:
            raw = json.loads(p.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("unreadable cache entry %s: %s", p, exc)
            return None
        try:
            entry = CacheEntry(raw["key"], raw["value"])
            ok = entry.key == key and raw["checksum"] == entry.checksum
        except (KeyError, TypeError):
            ok = False
        if not ok:
            log.warning("corrupted cache entry %s ignored", p)
            return None
        return entry

    def put(self, key: str, value: str) -> bool:
        if not self.enabled:
            return False
        entry = CacheEntry(key, value)
        p = self.path(key)
        tmp = None
        try:
            p.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=p.parent, prefix=".tmp-", suffix=".json")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(entry.dumps())
            os.replace(tmp, p)
            return True
        except OSError as exc:
            log.warning("cache write to %s failed: %s", p, exc)
            if tmp is not None:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
            return False
