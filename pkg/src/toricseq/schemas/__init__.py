"""JSON schemas for the fan document and every JSON output of the CLI."""

import json
from importlib import resources

NAMES = (
    "fan_document",
    "validation_report",
    "complex",
    "flags",
    "e1_page",
    "e2_page",
    "morphic_table",
    "betti_table",
    "oracle_report",
)

# command -> schema of its --format json output
COMMAND_SCHEMAS = {
    "validate": "validation_report",
    "cech": "complex",
    "flags": "flags",
    "e1": "e1_page",
    "e2": "e2_page",
    "morphic": "morphic_table",
    "betti": "betti_table",
    "oracle": "oracle_report",
    "builtin": "fan_document",
}


def load_schema(name: str) -> dict:
    if name not in NAMES:
        raise KeyError(f"no schema named {name!r}")
    return json.loads(resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8"))
