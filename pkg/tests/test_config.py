import pytest

from app.core.config import Limits, load_limits
from app.core.errors import ConfigError


def test_defaults_without_file(monkeypatch):
    monkeypatch.setattr("app.core.config.CONFIG_PATH", "")
    assert load_limits() == Limits()


def test_limits_table_overrides(tmp_path):
    path = tmp_path / "limits.toml"
    path.write_text("[limits]\noracle_cap = 6\nscan_zero_threshold = 1e-12\nunknown = 3\n", encoding="utf-8")
    limits = load_limits(path)
    assert limits.oracle_cap == 6
    assert limits.scan_zero_threshold == 1e-12
    assert limits.max_label == Limits().max_label


@pytest.mark.parametrize(
    "body",
    [
        "[limits]\noracle_cap = 'eight'\n",
        "[limits]\nmax_label = 0\n",
        "[limits]\ntet_cap = true\n",
        "limits = 3\n",
        "[limits\n",
    ],
)
def test_bad_config_raises(tmp_path, body):
    path = tmp_path / "limits.toml"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_limits(path)


def test_missing_file_raises(tmp_path):
    with pytest.raises(ConfigError):
        load_limits(tmp_path / "absent.toml")
