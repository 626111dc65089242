"""Key-value scenario files: a human-editable alternative to command-line
flags.  One `key = value` pair per line, `#` starts a comment, keys match the
long flag names with underscores.  Unknown keys are rejected."""

from __future__ import annotations

from .errors import DomainError

_BOOL = {"true": True, "false": False, "yes": True, "no": False, "1": True, "0": False}

# key -> coercion; shared by the time-to-event and binary branches
SCENARIO_KEYS = {
    "p0_e1": float,
    "p0_e2": float,
    "hr_e1": float,
    "hr_e2": float,
    "beta_e1": float,
    "beta_e2": float,
    "case": int,
    "copula": str,
    "rho": float,
    "rho_type": str,
    "followup_time": float,
    "alpha": float,
    "power": float,
    "ss_formula": str,
    "subdivisions": int,
    "sample_size": int,
    "seed": int,
    "eff_e1": float,
    "eff_e2": float,
    "effm_e1": str,
    "effm_e2": str,
    "effm_ce": str,
    "beta": float,
    "unpooled": "bool",
    "p1": float,
    "p2": float,
    "grid": int,
}


def _coerce(key: str, raw: str):
    kind = SCENARIO_KEYS[key]
    if kind == "bool":
        flag = _BOOL.get(raw.strip().lower())
        if flag is None:
            raise DomainError(f"scenario key {key!r} expects a boolean, got {raw!r}", field=key)
        return flag
    try:
        return kind(raw.strip())
    except ValueError as err:
        raise DomainError(f"scenario key {key!r}: {err}", field=key) from None


def parse_scenario_text(text: str) -> dict:
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise DomainError(f"scenario line {lineno}: expected 'key = value'")
        key, raw = (part.strip() for part in stripped.split("=", 1))
        if key not in SCENARIO_KEYS:
            raise DomainError(f"scenario line {lineno}: unknown key {key!r}", field=key)
        if key in values:
            raise DomainError(f"scenario line {lineno}: duplicate key {key!r}", field=key)
        values[key] = _coerce(key, raw)
    return values


def load_scenario(path: str) -> dict:
    with open(path) as handle:
        return parse_scenario_text(handle.read())
