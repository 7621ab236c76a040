"""Common test module
"""
from collections.abc import Mapping

from fdcmss import hashing, models
from fdcmss.sketch.fdcmss import FdcmssSketch

# The normalizer used by the worked example query
GOLDEN_NORMALIZER = 2.725

# The normalized decayed count of the worked example stream
GOLDEN_TOTAL = 632.671

# The worked example sketch after 1000 items: the two counters of each cell, row by row
GOLDEN_CELLS = (
    (((2, 555.33), (4, 537.23)), ((3, 262.06), (14, 103.54)), ((12, 36.55), (17, 14.78)),
     ((10, 52.27), (18, 21.88)), ((6, 98.22), (11, 36.76))),
    (((4, 172.20), (12, 109.28)), ((14, 36.40), (16, 35.78)), ((6, 125.75), (7, 125.15)),
     ((2, 539.78), (8, 117.33)), ((3, 263.07), (10, 193.90))),
)

# The worked example columns of each item, row by row
GOLDEN_COLUMNS = {
    2: (0, 3), 3: (1, 4), 4: (0, 0), 5: (0, 4), 6: (4, 2), 7: (2, 2), 8: (3, 3), 10: (3, 4), 11: (4, 4),
    12: (2, 0), 14: (1, 1), 16: (1, 1), 17: (2, 0), 18: (3, 1),
}


class TableRowHasher(hashing.RowHasher):
    """Row hasher that looks the columns up in a table. Items not in the table fall in column item mod width.
    """
    def __init__(self, table: Mapping[int, tuple[int, ...]], rows: int, width: int):
        super().__init__(rows, width)
        self.table = table

    def columns(self, item: int) -> tuple[int, ...]:
        return self.table.get(item, (item % self.width, ) * self.rows)


def golden_sketch() -> FdcmssSketch:
    """Create the worked example sketch with the state after 1000 items.

    :return: The sketch.
    """
    params = models.SketchParams(epsilon=0.01, delta=0.2, phi=0.025, decay=models.DecaySpec.exponential(0.999))
    sketch = FdcmssSketch(params, rows=2, columns=5, hasher=TableRowHasher(GOLDEN_COLUMNS, 2, 5))
    for row, cells in enumerate(GOLDEN_CELLS):
        for column, counters in enumerate(cells):
            for item, count in counters:
                sketch.cell(row, column).update(item, count)

    return sketch


def cell_state(sketch: FdcmssSketch, row: int, column: int) -> list[tuple[int, float]]:
    """Return the occupied counters of a cell, in storage order.

    :param sketch: The sketch.
    :param row: The row.
    :param column: The column.
    :return: The item and count of each counter.
    """
    return [(counter.item, counter.count) for counter in sketch.cell(row, column).counters() if counter.occupied]
