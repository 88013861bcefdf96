"""
Unit tests for environment-driven configuration
"""
import pytest

from src.config.settings import Config


class TestConfig:
    """Tests for Config"""

    @pytest.mark.unit
    def test_defaults(self):
        cfg = Config()
        assert cfg.SPECTRAL_TOL == 1e-10
        assert cfg.BRUTE_FORCE_MAX_N == 8
        assert cfg.JOBS == 1
        assert cfg.is_valid()

    @pytest.mark.unit
    def test_from_env(self, monkeypatch):
        monkeypatch.setenv("SPEXLAB_SPECTRAL_TOL", "1e-8")
        monkeypatch.setenv("SPEXLAB_JOBS", "4")
        monkeypatch.setenv("SPEXLAB_LOG_JSON", "TRUE")
        monkeypatch.setenv("SPEXLAB_SEED", "7")
        cfg = Config.from_env()
        assert cfg.SPECTRAL_TOL == 1e-8
        assert cfg.JOBS == 4
        assert cfg.LOG_JSON is True
        assert cfg.SEED == 7

    @pytest.mark.unit
    def test_metrics_flag(self, monkeypatch):
        monkeypatch.setenv("SPEXLAB_METRICS_ENABLED", "false")
        assert Config.from_env().METRICS_ENABLED is False

    @pytest.mark.unit
    @pytest.mark.parametrize("field,value,message", [
        ("SPECTRAL_TOL", 0.0, "SPEXLAB_SPECTRAL_TOL"),
        ("SERIES_TOL", 1.5, "SPEXLAB_SERIES_TOL"),
        ("SERIES_WINDOW", 1, "SPEXLAB_SERIES_WINDOW"),
        ("SERIES_BRACKET_EPS", 0.0, "SPEXLAB_SERIES_BRACKET_EPS"),
        ("JOBS", -1, "SPEXLAB_JOBS"),
        ("BRUTE_FORCE_MAX_N", 9, "SPEXLAB_BRUTE_FORCE_MAX_N"),
        ("PRECISE_DPS", 10, "SPEXLAB_PRECISE_DPS"),
        ("PRECISE_MAX_DPS", 40, "SPEXLAB_PRECISE_DPS"),
    ])
    def test_validation(self, field, value, message):
        cfg = Config(**{field: value})
        errors = cfg.validate()
        assert len(errors) == 1
        assert message in errors[0]
        assert not cfg.is_valid()

    @pytest.mark.unit
    def test_bad_number(self, monkeypatch):
        monkeypatch.setenv("SPEXLAB_JOBS", "many")
        with pytest.raises(ValueError):
            Config.from_env()
