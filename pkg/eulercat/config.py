# Copyright the eulercat developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, ClassVar, Optional, Union

PathLike = Union[str, Path]


@dataclass
class EulerConfig:
    """Holds config parameters for eulercat."""

    ext_dict_key: ClassVar[str] = "eulercat"

    subset_limit: int = 12
    series_terms: int = 8
    search_budget: int = 10
    oracle_limit: int = 6
    nerve_limit: int = 12

    @classmethod
    def from_extension_dict(
        cls: type["EulerConfig"], ext_dict: dict[str, Any]
    ) -> "EulerConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(ext_dict) - known)
        if unknown:
            raise ValueError(f"Unknown eulercat config keys: {', '.join(unknown)}")
        for key, value in ext_dict.items():
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(
                    f"Config key '{key}' must be a nonnegative integer, got {value!r}."
                )
        return cls(**ext_dict)

    def to_extension_dict(self) -> dict[str, int]:
        return asdict(self)

    @classmethod
    def from_config_file(cls: type["EulerConfig"], path: PathLike) -> "EulerConfig":
        """Read the object stored under ``"eulercat"`` in a JSON file.

        A file without that key gives the defaults.
        """
        document = json.loads(Path(path).read_text())
        if not isinstance(document, dict):
            raise ValueError(f"{path}: expected a JSON object at top level.")
        return cls.from_extension_dict(document.get(cls.ext_dict_key, {}))

    def update_config_file(self, path: PathLike) -> None:
        """Write these values under ``"eulercat"``, keeping other keys of the file."""
        target = Path(path)
        document = json.loads(target.read_text()) if target.exists() else {}
        document[self.ext_dict_key] = self.to_extension_dict()
        target.write_text(json.dumps(document, indent=2) + "\n")


def set_euler_config(
    path: PathLike,
    subset_limit: Optional[int] = None,
    series_terms: Optional[int] = None,
    search_budget: Optional[int] = None,
    oracle_limit: Optional[int] = None,
    nerve_limit: Optional[int] = None,
) -> None:
    """Set default values for any of the limits in the config file at ``path``.
    Can be overridden by keyword arguments and command-line flags."""

    target = Path(path)
    config = EulerConfig.from_config_file(target) if target.exists() else EulerConfig()
    if subset_limit is not None:
        config.subset_limit = subset_limit
    if series_terms is not None:
        config.series_terms = series_terms
    if search_budget is not None:
        config.search_budget = search_budget
    if oracle_limit is not None:
        config.oracle_limit = oracle_limit
    if nerve_limit is not None:
        config.nerve_limit = nerve_limit
    config.update_config_file(target)
