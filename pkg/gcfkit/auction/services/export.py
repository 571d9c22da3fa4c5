"""Figure-ready grids of the mechanism over the type box."""
from __future__ import annotations

import csv
from pathlib import Path
from typing import List, Tuple

import numpy as np

from gcfkit.auction.models import Menu
from gcfkit.core.services import inner_values_many
from gcfkit.core.services.batching import map_chunks
from gcfkit.exceptions import InputError


def grid_header(items: int) -> List[str]:
    return [f'y{i}' for i in range(1, items + 1)] + ['v', 't'] + [f'a{i}' for i in range(1, items + 1)]


def grid_rows(menu: Menu, resolution: int) -> Tuple[List[str], np.ndarray]:
    """Rows ``(y_1..y_n, v, t, a_1..a_n)`` on a ``resolution``-per-axis lattice of the type box."""
    if resolution < 1:
        raise InputError('grid resolution must be at least 1')
    types = menu.type_box.grid(resolution)

    def chunk(start: int, stop: int) -> np.ndarray:
        ys = types[start:stop]
        values = inner_values_many(menu.utility, ys)
        chosen = np.argmax(values, axis=1)
        utility = values[np.arange(ys.shape[0]), chosen]
        return np.column_stack([ys, utility, menu.prices[chosen], menu.allocations[chosen]])

    return grid_header(menu.items), np.vstack(map_chunks(chunk, types.shape[0]))


def write_grid_csv(menu: Menu, resolution: int, path: Path) -> Path:
    header, rows = grid_rows(menu, resolution)
    path = Path(path)
    with path.open('w', newline='') as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(value)) for value in row])
    return path
