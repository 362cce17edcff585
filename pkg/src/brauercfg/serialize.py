"""JSON reading and writing for configurations and group specs.

Configuration schema::

    {"vertices": ["1", "2", ...],
     "polygons": [{"id": 1, "members": ["1", "2"]}, ...],
     "mu": {"1": 2, ...},                 # optional, missing entries are 1
     "orientation": {"1": [1, 2, 3, 3]}}  # optional, canonical default otherwise

Group schema: ``{"name": str, "order": n, "table": [[...], ...]}`` or
``{"family": "cyclic", "params": [12]}`` (see :func:`brauercfg.groups.build_group`).
"""

from __future__ import annotations

import json
from pathlib import Path

from .config import Configuration
from .groups import FiniteGroup, build_group


class SchemaError(ValueError):
    pass


def config_from_dict(data: dict) -> Configuration:
    if not isinstance(data, dict):
        raise SchemaError("configuration must be a JSON object")
    try:
        vertices = data["vertices"]
        polygons = [(p["id"], p["members"]) for p in data["polygons"]]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"missing or malformed field: {exc}") from None
    if not isinstance(vertices, list) or not all(isinstance(v, (str, int)) for v in vertices):
        raise SchemaError("'vertices' must be a list of labels")
    for pid, members in polygons:
        if not isinstance(pid, int) or isinstance(pid, bool) or not isinstance(members, list):
            raise SchemaError("each polygon needs an integer 'id' and a 'members' list")
    mu = data.get("mu") or {}
    orientation = data.get("orientation")
    if not isinstance(mu, dict) or (orientation is not None and not isinstance(orientation, dict)):
        raise SchemaError("'mu' and 'orientation' must be JSON objects")
    return Configuration.from_data(vertices, polygons, mu, orientation)


def config_to_dict(cfg: Configuration, with_orientation: bool = True) -> dict:
    out = {
        "vertices": list(cfg.labels),
        "polygons": [
            {"id": p.id, "members": [cfg.labels[v] for v, c in p.members for _ in range(c)]}
            for p in cfg.polygons
        ],
        "mu": {cfg.labels[v]: m for v, m in enumerate(cfg.mu)},
    }
    if with_orientation:
        out["orientation"] = {cfg.labels[v]: list(seq) for v, seq in cfg.orientation}
    return out


def load_config(path: str | Path) -> Configuration:
    with open(path) as fh:
        return config_from_dict(json.load(fh))


def dump_config(cfg: Configuration) -> str:
    return json.dumps(config_to_dict(cfg), indent=2) + "\n"


def load_group(path: str | Path) -> FiniteGroup:
    with open(path) as fh:
        return build_group(json.load(fh))
