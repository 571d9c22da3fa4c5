"""Optimizer trace rows and their CSV export."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

FIELDS = ('step', 'objective', 'grad_norm', 'tau')


@dataclass
class TraceRecorder:
    rows: List[dict] = field(default_factory=list)

    def record(self, step: int, objective: float, grad_norm: float, tau: Optional[float] = None) -> None:
        self.rows.append({
            'step': int(step),
            'objective': float(objective),
            'grad_norm': float(grad_norm),
            'tau': '' if tau is None else float(tau),
        })

    @property
    def objectives(self) -> list[float]:
        return [row['objective'] for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def write_csv(self, path: Path) -> Path:
        path = Path(path)
        with path.open('w', newline='') as handle:
            writer = csv.DictWriter(handle, fieldnames=FIELDS)
            writer.writeheader()
            for row in self.rows:
                writer.writerow({key: (repr(value) if isinstance(value, float) else value) for key, value in row.items()})
        return path
