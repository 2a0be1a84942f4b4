# SPDX-License-Identifier: MPL-2.0
import os

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from metta_kb.errors import ConfigurationError
from metta_kb.utils.log_config import get_logger

logger = get_logger(__name__)


class AppSettings(BaseSettings):
    log_level: str = Field(
        "WARNING",
        description="Global logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).",
    )
    log_file_path: str | None = Field(
        None, description="Optional file that receives a copy of every log record."
    )

    model_config = SettingsConfigDict(env_prefix="METTA_APP_", case_sensitive=False)


class EvalSettings(BaseSettings):
    max_depth: int = Field(
        1000, ge=1, description="Default evaluation depth budget (METTA_MAX_DEPTH)."
    )
    typecheck: bool = Field(
        False, description="Type-check directives before evaluating them."
    )

    model_config = SettingsConfigDict(env_prefix="METTA_", case_sensitive=False)


class SpaceSettings(BaseSettings):
    indexed: bool = Field(
        True, description="Index expressions by head symbol and arity."
    )

    model_config = SettingsConfigDict(env_prefix="METTA_SPACE_", case_sensitive=False)


class AppConfig(BaseSettings):
    app: AppSettings = Field(default_factory=lambda: AppSettings())
    evaluation: EvalSettings = Field(default_factory=lambda: EvalSettings())
    space: SpaceSettings = Field(default_factory=lambda: SpaceSettings())

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=False, extra="ignore"
    )

    def __init__(self, *args: object, **kwargs: object) -> None:
        super().__init__(*args, **kwargs)
        self._setup_logging_from_config()
        logger.debug("Application configuration loaded.")

    def _setup_logging_from_config(self) -> None:
        from metta_kb.utils import log_config

        log_config.setup_logging(
            level=log_config.level_from_name(self.app.log_level),
            log_file=self.app.log_file_path,
        )


def load_config(env_file: str | None = None) -> AppConfig:
    """Load and return the application configuration.

    Parameters
    ----------
    env_file : str | None, optional
        Path to a ``.env`` file. If ``None``, a file named ``.env`` in the
        current working directory is used. The ``METTA_APP_ENV_FILE``
        environment variable takes precedence if set. Variables already in
        the environment are never overridden.
    """

    if env_file is None:
        env_file = os.environ.get(
            "METTA_APP_ENV_FILE", os.path.join(os.getcwd(), ".env")
        )

    if os.path.exists(env_file):
        try:
            with open(env_file, encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if not line or line.startswith("#") or "=" not in line:
                        continue
                    key, value = line.split("=", 1)
                    os.environ.setdefault(key.strip(), value.strip())
        except OSError as e:
            logger.warning(f"Failed to read env file {env_file}: {e}")

    try:
        return AppConfig(_env_file=None)
    except ValidationError as e:
        logger.error(f"Configuration validation error: {e}")
        raise ConfigurationError(f"Invalid application configuration: {e}") from e
