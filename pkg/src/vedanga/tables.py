"""Loading of name tables.

A name table is a UTF-8 text file with one ``key<TAB>value[<TAB>...]`` row
per line.  Blank lines and lines starting with ``#`` are skipped.  The
package ships its default tables under ``vedanga/data``; users can point
at their own directory with files of the same names.
"""

from __future__ import annotations

import csv
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Union

from .errors import VedangaError

PathLike = Union[str, Path]


class TableError(VedangaError, ValueError):
    pass


def read_rows(path: PathLike, columns: int = 2) -> List[List[str]]:
    """Read a table file into rows of exactly ``columns`` fields."""
    with open(path, encoding="utf-8", newline="") as fh:
        return _parse(fh, columns, str(path))


def _parse(lines, columns, source) -> List[List[str]]:
    content = (line for line in lines if line.strip() and not line.lstrip().startswith("#"))
    rows = []
    for lineno, row in enumerate(csv.reader(content, delimiter="\t"), start=1):
        row = [field.strip() for field in row]
        if len(row) != columns or not all(row):
            raise TableError(f"{source}: row {lineno} needs {columns} tab-separated fields: {row}")
        rows.append(row)
    return rows


def read_table(path: PathLike) -> Dict[str, str]:
    """Key -> name mapping from a two-column table file."""
    table = {}
    for key, name in read_rows(path):
        if key in table:
            raise TableError(f"{path}: duplicate key {key!r}")
        table[key] = name
    return table


def builtin_rows(filename: str, columns: int = 2) -> List[List[str]]:
    text = resources.files("vedanga.data").joinpath(filename).read_text(encoding="utf-8")
    return _parse(text.splitlines(), columns, filename)


def builtin_table(filename: str) -> Dict[str, str]:
    return {key: name for key, name in builtin_rows(filename)}


def load_table(filename: str, names_dir: Optional[PathLike] = None) -> Dict[str, str]:
    """Table from ``names_dir`` if the file exists there, else the shipped one.

    Returns an empty dict when neither exists.
    """
    if names_dir is not None:
        candidate = Path(names_dir) / filename
        if candidate.exists():
            return read_table(candidate)
    try:
        return builtin_table(filename)
    except FileNotFoundError:
        return {}
