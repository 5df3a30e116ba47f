"""Append-only on-disk cache of computed coefficients.

One JSON object per line in ``$KRONRED_CACHE_DIR/coefficients.jsonl``
(default ``~/.cache/kronred``).  Records are keyed by kind, canonical key
and algorithm.  A line that does not parse, or two lines that disagree on the
same key, are reported on stderr and ignored, so the value gets recomputed.
Fresh records are appended; replacing a bad value compacts the file so the
stale line is gone.  Only the main process writes.
"""

from __future__ import annotations

import itertools
import json
import os
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__
from .kronecker import canonical_key as kron_key
from .partitions import Partition, render

ENV_VAR = "KRONRED_CACHE_DIR"
FILENAME = "coefficients.jsonl"
KINDS = ("kron", "reduced", "lr")


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path.home() / ".cache" / "kronred"


def reduced_key(alpha, beta, gamma) -> str:
    """S3-normal form of a reduced triple (no transposition symmetry)."""
    texts = [render(Partition(p)) for p in (alpha, beta, gamma)]
    return min(" ".join(t) for t in itertools.permutations(texts))


def lr_key(outer, inners) -> str:
    return " ".join([render(Partition(outer))] + [render(Partition(p)) for p in inners])


def key_for(kind: str, parts) -> str:
    if kind == "kron":
        return kron_key(*parts)
    if kind == "reduced":
        return reduced_key(*parts)
    if kind == "lr":
        return lr_key(parts[0], parts[1:])
    raise ValueError(f"unknown cache kind {kind!r}")


@dataclass(frozen=True)
class CacheRecord:
    kind: str
    canonical_key: str
    value: str
    algorithm: str
    tool_version: str = __version__

    @classmethod
    def parse(cls, line: str) -> "CacheRecord":
        data = json.loads(line)
        rec = cls(**{k: data[k] for k in ("kind", "canonical_key", "value", "algorithm", "tool_version")})
        if rec.kind not in KINDS:
            raise ValueError(f"unknown kind {rec.kind!r}")
        if not (isinstance(rec.value, str) and rec.value.isdigit()):
            raise ValueError(f"value {rec.value!r} is not a nonnegative integer")
        return rec

    def dump(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def _warn(msg: str) -> None:
    print(f"kronred: cache: {msg}", file=sys.stderr)


class Cache:
    def __init__(self, directory: Path | str | None = None, enabled: bool = True):
        self.enabled = enabled
        self.directory = Path(directory) if directory is not None else default_dir()
        self.path = self.directory / FILENAME
        self._data: dict[tuple, int] = {}
        self._bad: set = set()
        self.problems = 0
        if enabled:
            self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with self.path.open(encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = CacheRecord.parse(line)
                except (ValueError, KeyError, TypeError) as exc:
                    self.problems += 1
                    _warn(f"corrupt record at line {lineno} ignored ({exc})")
                    continue
                k = (rec.kind, rec.canonical_key, rec.algorithm)
                v = int(rec.value)
                if k in self._bad:
                    continue
                if k in self._data and self._data[k] != v:
                    self.problems += 1
                    _warn(f"conflicting records for {rec.kind} {rec.canonical_key!r} "
                          f"({self._data[k]} vs {v}); will recompute")
                    del self._data[k]
                    self._bad.add(k)
                    continue
                self._data[k] = v

    def __len__(self) -> int:
        return len(self._data)

    def get(self, kind: str, key: str, algorithm: str) -> int | None:
        if not self.enabled:
            return None
        return self._data.get((kind, key, algorithm))

    def put(self, kind: str, key: str, algorithm: str, value: int) -> None:
        """Store a freshly computed value; a disagreeing record is reported."""
        if not self.enabled:
            return
        k = (kind, key, algorithm)
        old = self._data.get(k)
        if old == value:
            return
        if old is not None:
            self.problems += 1
            _warn(f"cached {kind} {key!r} = {old} disagrees with fresh value {value}; replaced")
        repaired = old is not None or k in self._bad
        self._data[k] = value
        self._bad.discard(k)
        self.directory.mkdir(parents=True, exist_ok=True)
        if repaired:
            # appending would leave the stale line behind, so rewrite the file
            self._rewrite()
            return
        with self.path.open("a", encoding="utf-8") as fh:
            fh.write(CacheRecord(kind, key, str(value), algorithm).dump() + "\n")

    def _rewrite(self) -> None:
        tmp = self.path.with_suffix(".tmp")
        with tmp.open("w", encoding="utf-8") as fh:
            for rec in self.records():
                fh.write(rec.dump() + "\n")
        os.replace(tmp, self.path)

    def lookup(self, kind: str, parts, algorithm: str, compute) -> tuple[int, bool]:
        """(value, from_cache).  ``compute`` is called on a miss."""
        key = key_for(kind, parts)
        hit = self.get(kind, key, algorithm)
        if hit is not None:
            return hit, True
        value = compute()
        self.put(kind, key, algorithm, value)
        return value, False

    def records(self) -> list:
        return [CacheRecord(kind, key, str(v), algo)
                for (kind, key, algo), v in sorted(self._data.items())]

    def clear(self) -> None:
        if self.path.exists():
            self.path.unlink()
        self._data.clear()
        self._bad.clear()
