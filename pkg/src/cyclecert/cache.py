"""Content-addressed cache for expensive symbolic results.

Keys are sha256 digests of (operation id, canonical input text, parameters);
entries are JSON files carrying the payload together with a digest of the
payload itself, so a mutated (poisoned) entry is detected on read and
treated as a miss.  The location defaults to ~/.cache/cyclecert and is
overridden by the CYCLECERT_CACHE_DIR environment variable.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

__all__ = ["cache_dir", "cache_key", "cached_call", "CacheStats"]


class CacheStats:
    """Hit bookkeeping for the report's cache_hits field."""

    def __init__(self):
        self.hits: list[str] = []
        self.misses: list[str] = []
        self.poisoned: list[str] = []


def cache_dir() -> Path:
    env = os.environ.get("CYCLECERT_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "cyclecert"


def cache_key(op_id: str, inputs: str, params: dict | None = None) -> str:
    blob = json.dumps({"op": op_id, "inputs": inputs, "params": params or {}},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _payload_digest(payload) -> str:
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    ).hexdigest()


def cached_call(op_id: str, inputs: str, params: dict | None, compute,
                stats: CacheStats | None = None, enabled: bool = True):
    """Return compute()'s JSON-serializable result through the cache."""
    if not enabled:
        return compute()
    key = cache_key(op_id, inputs, params)
    path = cache_dir() / f"{key}.json"
    if path.exists():
        try:
            entry = json.loads(path.read_text())
            if entry.get("digest") == _payload_digest(entry.get("payload")):
                if stats is not None:
                    stats.hits.append(op_id)
                return entry["payload"]
            if stats is not None:
                stats.poisoned.append(op_id)
        except (json.JSONDecodeError, KeyError, OSError):
            if stats is not None:
                stats.poisoned.append(op_id)
    result = compute()
    if stats is not None:
        stats.misses.append(op_id)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"digest": _payload_digest(result),
                               "payload": result}, sort_keys=True))
    tmp.replace(path)
    return result
