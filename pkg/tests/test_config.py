"""Tests for configuration loading, saving and precedence."""

from besselsum.config import config_digest, default_config, load_config, resolve_threads, save_config
from besselsum.core.special_functions import BesselEvalConfig


def test_missing_file_gives_defaults(tmp_path):
    assert load_config(tmp_path / "missing.toml") == default_config()


def test_save_and_load(tmp_path):
    path = tmp_path / "config.toml"
    config = default_config()
    config["tolerances"]["identity"] = 1e-7
    config["runtime"]["threads"] = 3
    assert save_config(config, path)
    loaded = load_config(path)
    assert loaded["tolerances"]["identity"] == 1e-7
    assert loaded["runtime"]["threads"] == 3


def test_partial_file_merges_over_defaults(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("[heat]\nkernel_tail = 1e-12\n", encoding="utf-8")
    loaded = load_config(path)
    assert loaded["heat"]["kernel_tail"] == 1e-12
    assert loaded["heat"]["steps_per_unit"] == 10
    assert loaded["bessel"] == default_config()["bessel"]


def test_broken_file_falls_back(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text("[heat\n", encoding="utf-8")
    assert load_config(path) == default_config()


def test_thread_precedence(monkeypatch):
    config = default_config()
    config["runtime"]["threads"] = 2
    monkeypatch.delenv("BESSELSUM_THREADS", raising=False)
    assert resolve_threads(None, config) == 2
    monkeypatch.setenv("BESSELSUM_THREADS", "5")
    assert resolve_threads(None, config) == 5
    assert resolve_threads(7, config) == 7
    monkeypatch.setenv("BESSELSUM_THREADS", "many")
    assert resolve_threads(None, config) == 2


def test_digest_is_stable():
    a = config_digest(default_config(), {"t": "0.5"})
    assert a == config_digest(default_config(), {"t": "0.5"})
    assert a != config_digest(default_config(), {"t": "0.6"})
    assert len(a) == 16


def test_bessel_config_from_file_values():
    config = default_config()
    config["bessel"]["quadrature_nodes"] = 32
    assert BesselEvalConfig.from_config(config).quadrature_nodes == 32
