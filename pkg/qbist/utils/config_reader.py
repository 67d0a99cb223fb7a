# Copyright The Neo4j Authors
# SPDX-License-Identifier: Apache-2.0

# Based on the config reader of https://github.com/neo4j/neo4j-graphrag-python/,
# reduced to local campaign files and extended with model validation.

import json
import os
import re
from pathlib import Path
from typing import Any, TypeVar

import fsspec
import yaml
from dotenv import load_dotenv
from fsspec.implementations.local import LocalFileSystem
from pydantic import BaseModel

from qbist.log import logger

ModelT = TypeVar("ModelT", bound=BaseModel)

_ENV_PATTERN = re.compile(r"\$\{([^}]+)\}")


class ConfigReader:
    """Reads campaign settings from JSON or YAML files.

    The format is chosen from the file extension (``.json``, ``.yaml``,
    ``.yml``, any case). ``${VAR_NAME}`` references are replaced with
    environment values; unknown variables are left untouched.
    """

    def __init__(
        self,
        fs: fsspec.AbstractFileSystem | None = None,
        env_file: str | Path | None = None,
    ) -> None:
        """Initializes a config reader.

        Args:
            fs: Filesystem to read from. Defaults to the local filesystem.
            env_file: Optional ``.env`` file loaded before reading. When absent,
                ``.env`` in the working directory and ``~/.qbist.env`` are tried.
        """
        self.fs = fs or LocalFileSystem()
        self.logger = logger.getChild(self.__class__.__name__)
        candidates = (
            [Path(env_file)]
            if env_file
            else [Path(".env"), Path.home() / ".qbist.env"]
        )
        for location in candidates:
            if location.exists():
                load_dotenv(location)
                self.logger.debug("Loaded environment from %s", location)
                break

    def _resolve_env_vars(self, content: str) -> str:
        def replace_env_var(match: re.Match[str]) -> str:
            return os.getenv(match.group(1), match.group(0))

        return _ENV_PATTERN.sub(replace_env_var, content)

    def _read_text(self, file_path: str, resolve_env_vars: bool) -> str:
        with self.fs.open(file_path, "r") as f:
            content = f.read()
        return self._resolve_env_vars(content) if resolve_env_vars else content

    def read_json(self, file_path: str, resolve_env_vars: bool = True) -> Any:
        return json.loads(self._read_text(file_path, resolve_env_vars))

    def read_yaml(self, file_path: str, resolve_env_vars: bool = True) -> Any:
        return yaml.safe_load(self._read_text(file_path, resolve_env_vars))

    def read(self, file_path: str, resolve_env_vars: bool = True) -> dict[str, Any]:
        """Read a configuration file into a dictionary.

        Args:
            file_path: Path to the configuration file.
            resolve_env_vars: Whether to resolve ``${VAR}`` references.

        Returns:
            Parsed configuration dictionary.

        Raises:
            ValueError: If the extension is unsupported or the document is not
                a mapping.
        """
        extension = Path(file_path).suffix.lower()
        if extension == ".json":
            data = self.read_json(file_path, resolve_env_vars)
        elif extension in (".yaml", ".yml"):
            data = self.read_yaml(file_path, resolve_env_vars)
        else:
            raise ValueError(f"Unsupported extension: {extension}")
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ValueError(f"{file_path} must contain a mapping at top level")
        return data

    def read_model(self, file_path: str, model: type[ModelT]) -> ModelT:
        """Read a file and validate it into ``model``."""
        return model.model_validate(self.read(file_path))
