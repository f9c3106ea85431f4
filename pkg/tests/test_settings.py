import pytest
from pydantic import ValidationError

from pmcsolver.config.settings import Settings


def test_defaults():
    config = Settings(_env_file=None)
    assert config.default_budget == 200_000
    assert config.definition_oracle_max_n == 7
    assert config.log_level == "INFO"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("PMC_TREEWIDTH_MAX_N", "12")
    monkeypatch.setenv("PMC_ENVIRONMENT", "ci")
    config = Settings(_env_file=None)
    assert config.treewidth_max_n == 12
    assert config.environment == "ci"


@pytest.mark.parametrize("field", ["default_budget", "verify_max_n", "generator_max_rejections"])
def test_limits_must_be_positive(field):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: 0})
