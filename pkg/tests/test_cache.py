import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from erdos_fq import cache as cache_mod
from erdos_fq.cache import (
    CacheCorruptError,
    cache_path,
    clear_cache,
    list_cache,
    load_irreducible,
    load_or_build_irreducible,
    load_or_build_smooth,
    load_smooth,
    save_irreducible,
    save_smooth,
)
from erdos_fq.counting import irreducible_table, smooth_table


def test_cache_dir_env(monkeypatch, tmp_path):
    monkeypatch.setenv(cache_mod.CACHE_ENV, str(tmp_path / "env"))
    assert cache_mod.cache_dir() == tmp_path / "env"
    assert cache_mod.cache_dir(tmp_path / "flag") == tmp_path / "flag"
    monkeypatch.delenv(cache_mod.CACHE_ENV)
    assert cache_mod.cache_dir().name == "erdos_fq"


def test_irreducible_file_layout(tmp_path):
    path = save_irreducible(irreducible_table(2, 200), tmp_path)
    assert path == cache_path(tmp_path, "irreducible", 2, N=200)
    payload = json.loads(path.read_text())
    assert len(payload["entries"]) == 200
    assert payload["entries"]["1"] == "2"
    assert all(isinstance(v, str) for v in payload["entries"].values())


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16]), st.integers(1, 120))
def test_irreducible_round_trip(tmp_path, q, N):
    table = irreducible_table(q, N)
    loaded = load_irreducible(save_irreducible(table, tmp_path))
    assert loaded.counts == table.counts
    assert loaded.q == table.q


@settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16]), st.integers(0, 5), st.integers(1, 40))
def test_smooth_round_trip(tmp_path, q, K, m):
    table = smooth_table(q, K, m)
    loaded = load_smooth(save_smooth(table, tmp_path))
    assert loaded.counts == table.counts
    assert (loaded.k_max, loaded.m) == (K, m)


def _flip_digit(path, key):
    payload = json.loads(path.read_text())
    v = payload["entries"][key]
    payload["entries"][key] = v[:-1] + str((int(v[-1]) + 1) % 10)
    path.write_text(json.dumps(payload))


def test_flipped_digit_is_detected_and_rebuilt(tmp_path, caplog):
    path = save_irreducible(irreducible_table(2, 40), tmp_path)
    _flip_digit(path, "17")
    with pytest.raises(CacheCorruptError, match="necklace"):
        load_irreducible(path)
    with caplog.at_level("WARNING"):
        table = load_or_build_irreducible(2, 40, tmp_path)
    assert "rebuilding" in caplog.text
    assert table.counts == irreducible_table(2, 40).counts
    assert load_irreducible(path).counts == table.counts


def test_smooth_digest_mismatch(tmp_path):
    path = save_smooth(smooth_table(3, 4, 10), tmp_path)
    _flip_digit(path, "3,20")
    with pytest.raises(CacheCorruptError, match="digest"):
        load_smooth(path)
    rebuilt = load_or_build_smooth(3, 4, 10, tmp_path)
    assert rebuilt.counts == smooth_table(3, 4, 10).counts


def test_smooth_invariant_failure_even_with_matching_digest(tmp_path):
    path = save_smooth(smooth_table(2, 3, 6), tmp_path)
    payload = json.loads(path.read_text())
    payload["entries"]["1,5"] = "7"
    payload["sha256"] = cache_mod._digest(payload["entries"])
    path.write_text(json.dumps(payload))
    with pytest.raises(CacheCorruptError, match="single-factor"):
        load_smooth(path)


def test_garbage_and_wrong_kind(tmp_path):
    bad = tmp_path / "irreducible-q2-N5.json"
    bad.write_text("{not json")
    with pytest.raises(CacheCorruptError):
        load_irreducible(bad)
    path = save_smooth(smooth_table(2, 2, 3), tmp_path)
    with pytest.raises(CacheCorruptError, match="kind"):
        load_irreducible(path)


def test_list_and_clear(tmp_path):
    save_irreducible(irreducible_table(2, 10), tmp_path)
    save_irreducible(irreducible_table(3, 10), tmp_path)
    save_smooth(smooth_table(2, 2, 5), tmp_path)
    assert len(list_cache(tmp_path)) == 3
    assert len(clear_cache(tmp_path, "irreducible", 3)) == 1
    assert len(clear_cache(tmp_path, "smooth")) == 1
    assert [p.name for p in list_cache(tmp_path)] == ["irreducible-q2-N10.json"]
    assert list_cache(tmp_path / "missing") == []
