"""Enumeration caps.

Everything in this package is exact and exhaustive, so every enumeration is
bounded.  The caps below are deliberate configuration, not guesses; they can
be overridden programmatically or through the SPECTRA_CAPS environment
variable (comma-separated key=value pairs, e.g.
``SPECTRA_CAPS=max_map_candidates=2000000,max_powerset_carrier=2048``).
"""

from __future__ import annotations

import dataclasses
import os

from .errors import ValidationError


@dataclasses.dataclass(frozen=True)
class Caps:
    # total candidate assignments allowed when enumerating maps between spaces
    max_map_candidates: int = 10**6
    # largest carrier a powerset algebra constructor will build (2**atoms)
    max_powerset_carrier: int = 2**10
    # largest product ring the product constructor will build
    max_product_carrier: int = 64
    # largest carrier for generic (table-driven) ideal and prime enumeration
    max_prime_carrier: int = 16
    # largest point count for exhaustive topology enumeration
    max_points_exhaustive: int = 4

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


DEFAULT_CAPS = Caps()

_ENV_VAR = "SPECTRA_CAPS"


def caps_from_env(base: Caps = DEFAULT_CAPS, env: str | None = None) -> Caps:
    """Return ``base`` overridden by the SPECTRA_CAPS environment variable."""
    raw = os.environ.get(_ENV_VAR, "") if env is None else env
    raw = raw.strip()
    if not raw:
        return base
    fields = {f.name for f in dataclasses.fields(Caps)}
    overrides = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in fields:
            raise ValidationError(f"bad {_ENV_VAR} entry: {item!r}")
        try:
            overrides[key] = int(value.strip())
        except ValueError as exc:
            raise ValidationError(f"bad {_ENV_VAR} value in {item!r}") from exc
    return dataclasses.replace(base, **overrides)
