import pytest
from pydantic import ValidationError

from signed_spectra.core.config import Settings
from signed_spectra.core.errors import (
    EXIT_NUMERICAL,
    EXIT_USAGE,
    EXIT_VIOLATION,
    BudgetExceeded,
    ParseError,
    VerificationFailed,
    ZeroMap,
)
from signed_spectra.schemas.errors import EXIT_CODES, error_response
from signed_spectra.schemas.run import Command, RunConfig


@pytest.mark.parametrize(
    "exc, code",
    [
        (ParseError(4, "bad"), EXIT_USAGE),
        (BudgetExceeded("too big"), EXIT_NUMERICAL),
        (ZeroMap("empty"), EXIT_NUMERICAL),
        (VerificationFailed("1 violated"), EXIT_VIOLATION),
    ],
)
def test_error_response_carries_exit_code(exc, code):
    response = error_response(exc)
    assert response.exit_code == code
    assert response.error == type(exc).__name__
    assert code in EXIT_CODES


def test_parse_error_detail_names_line():
    assert error_response(ParseError(4, "bad")).detail == "line 4: bad"


def test_settings_read_environment(monkeypatch):
    monkeypatch.setenv("SIGNED_SPECTRA_THREADS", "4")
    monkeypatch.setenv("SIGNED_SPECTRA_EIGENSOLVER", "lapack")
    settings = Settings()
    assert settings.THREADS == 4
    assert settings.EIGENSOLVER == "lapack"

    monkeypatch.setenv("SIGNED_SPECTRA_EIGENSOLVER", "qr")
    with pytest.raises(ValidationError):
        Settings()


def test_run_config_validation():
    assert RunConfig(command=Command.CLUSTER).seed == 0
    with pytest.raises(ValidationError):
        RunConfig(command=Command.CLUSTER, k=0)
    with pytest.raises(ValidationError):
        RunConfig(command=Command.CHEEGER, measure="custom")
    with pytest.raises(ValidationError):
        RunConfig(command=Command.CLUSTER, epsilon=2.0)
