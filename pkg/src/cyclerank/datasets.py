"""Bundled example datasets shipped with the package."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

BUNDLED = {
    "toy-wiki": {
        "display_name": "Toy wikilink graph",
        "format": "edgelist",
        "filename": "toy-wiki.csv",
    },
    "toy-social": {
        "display_name": "Toy social interactions",
        "format": "pajek",
        "filename": "toy-social.net",
    },
    "toy-books": {
        "display_name": "Toy co-purchase graph",
        "format": "asd",
        "filename": "toy-books.asd",
    },
}


def bundled_text(dataset_id: str) -> str:
    filename = BUNDLED[dataset_id]["filename"]
    return resources.files("cyclerank").joinpath("data", filename).read_text("utf-8")


def bundled_path(dataset_id: str) -> Path:
    filename = BUNDLED[dataset_id]["filename"]
    return Path(str(resources.files("cyclerank").joinpath("data", filename)))
