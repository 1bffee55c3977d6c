"""On-disk JSON cache for exact count tables.

Counts are stored as decimal strings. Every load re-checks table invariants
(necklace identity for irreducible counts; single-factor row, marginal sums
and a digest for smooth counts). A file that fails is rebuilt, never trusted.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from pathlib import Path

import numpy as np
from gmpy2 import mpz

from .counting import (
    IrreducibleCountTable,
    SmoothCountTable,
    _irreducible_count,
    irreducible_table,
    smooth_table,
)
from .exact import validate_field_order

__all__ = [
    "CACHE_ENV",
    "SCHEMA_VERSION",
    "CacheCorruptError",
    "cache_dir",
    "cache_path",
    "clear_cache",
    "list_cache",
    "load_irreducible",
    "load_or_build_irreducible",
    "load_or_build_smooth",
    "load_smooth",
    "save_irreducible",
    "save_smooth",
]

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CACHE_ENV = "ERDOS_FQ_CACHE_DIR"


class CacheCorruptError(ValueError):
    """A cache file failed to parse or failed an invariant check."""


def cache_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "erdos_fq"


def cache_path(directory: Path, kind: str, q: int, **params: int) -> Path:
    tail = "-".join(f"{k}{v}" for k, v in sorted(params.items()))
    return Path(directory) / f"{kind}-q{q}-{tail}.json"


def _digest(entries: dict[str, str]) -> str:
    blob = json.dumps(entries, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _write(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, indent=1, sort_keys=True))
    tmp.replace(path)


def _read(path: Path, kind: str) -> dict:
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheCorruptError(f"{path}: unreadable ({exc})") from exc
    if payload.get("schema_version") != SCHEMA_VERSION or payload.get("kind") != kind:
        raise CacheCorruptError(f"{path}: wrong schema or kind")
    return payload


# irreducible ---------------------------------------------------------------


def save_irreducible(table: IrreducibleCountTable, directory: Path) -> Path:
    entries = {str(n): str(c) for n, c in sorted(table.counts.items())}
    path = cache_path(directory, "irreducible", table.q.q, N=table.max_degree)
    _write(path, {
        "schema_version": SCHEMA_VERSION,
        "kind": "irreducible",
        "q": table.q.q,
        "params": {"N": table.max_degree},
        "entries": entries,
        "sha256": _digest(entries),
    })
    return path


def load_irreducible(path: Path) -> IrreducibleCountTable:
    payload = _read(path, "irreducible")
    try:
        fo = validate_field_order(int(payload["q"]))
        N = int(payload["params"]["N"])
        counts = {int(n): int(c) for n, c in payload["entries"].items()}
    except (KeyError, ValueError, TypeError) as exc:
        raise CacheCorruptError(f"{path}: malformed payload ({exc})") from exc
    if sorted(counts) != list(range(1, N + 1)):
        raise CacheCorruptError(f"{path}: expected degrees 1..{N}")
    table = IrreducibleCountTable(fo, N, counts)
    try:
        table.validate()
    except ValueError as exc:
        raise CacheCorruptError(f"{path}: {exc}") from exc
    return table


def load_or_build_irreducible(q: int, N: int, directory: Path) -> IrreducibleCountTable:
    path = cache_path(directory, "irreducible", q, N=N)
    if path.exists():
        try:
            return load_irreducible(path)
        except CacheCorruptError as exc:
            log.warning("rebuilding corrupt cache: %s", exc)
    table = irreducible_table(q, N)
    save_irreducible(table, directory)
    return table


# smooth --------------------------------------------------------------------


def save_smooth(table: SmoothCountTable, directory: Path) -> Path:
    entries = {
        f"{k},{n}": str(int(v))
        for k in range(table.k_max + 1)
        for n, v in enumerate(table.rows[k])
        if v
    }
    path = cache_path(directory, "smooth", table.q.q, K=table.k_max, m=table.m)
    _write(path, {
        "schema_version": SCHEMA_VERSION,
        "kind": "smooth",
        "q": table.q.q,
        "params": {"k_max": table.k_max, "m": table.m},
        "entries": entries,
        "sha256": _digest(entries),
    })
    return path


def _check_smooth(table: SmoothCountTable) -> None:
    q, m, K = table.q.q, table.m, table.k_max
    if table.get(0, 0) != 1:
        raise ValueError("Psi'_0(0) != 1")
    if K >= 1:
        for n in range(1, m + 1):
            if table.get(1, n) != _irreducible_count(q, n):
                raise ValueError(f"single-factor row differs from pi'(n) at n={n}")
    for n in range(1, min(m, K) + 1):
        if sum(table.get(k, n) for k in range(n + 1)) != q**n:
            raise ValueError(f"marginal sum over k differs from q^n at n={n}")


def load_smooth(path: Path) -> SmoothCountTable:
    payload = _read(path, "smooth")
    try:
        fo = validate_field_order(int(payload["q"]))
        K = int(payload["params"]["k_max"])
        m = int(payload["params"]["m"])
        entries = payload["entries"]
        if _digest(entries) != payload.get("sha256"):
            raise CacheCorruptError(f"{path}: digest mismatch")
        rows = [np.zeros(k * m + 1, dtype=object) for k in range(K + 1)]
        for row in rows:
            row[:] = mpz(0)
        for key, val in entries.items():
            k, n = (int(x) for x in key.split(","))
            rows[k][n] = mpz(int(val))
    except (KeyError, ValueError, TypeError, IndexError) as exc:
        if isinstance(exc, CacheCorruptError):
            raise
        raise CacheCorruptError(f"{path}: malformed payload ({exc})") from exc
    table = SmoothCountTable(fo, m, K, rows)
    try:
        _check_smooth(table)
    except ValueError as exc:
        raise CacheCorruptError(f"{path}: {exc}") from exc
    return table


def load_or_build_smooth(q: int, k_max: int, m: int, directory: Path) -> SmoothCountTable:
    path = cache_path(directory, "smooth", q, K=k_max, m=m)
    if path.exists():
        try:
            return load_smooth(path)
        except CacheCorruptError as exc:
            log.warning("rebuilding corrupt cache: %s", exc)
    table = smooth_table(q, k_max, m)
    save_smooth(table, directory)
    return table


# housekeeping ----------------------------------------------------------------


def list_cache(directory: Path) -> list[Path]:
    d = Path(directory)
    return sorted(d.glob("*.json")) if d.is_dir() else []


def clear_cache(directory: Path, kind: str | None = None, q: int | None = None) -> list[Path]:
    removed = []
    for path in list_cache(directory):
        name = path.name
        if kind is not None and not name.startswith(f"{kind}-"):
            continue
        if q is not None and f"-q{q}-" not in name:
            continue
        path.unlink()
        removed.append(path)
    return removed
