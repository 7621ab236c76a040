"""Row hash families for the sketches
"""
import abc

import xxhash

# FNV-1a 64 bit parameters
_FNV_OFFSET_BASIS = 0xcbf29ce484222325
_FNV_PRIME = 0x100000001b3
_MASK_64 = 0xffffffffffffffff


def item_bytes(item: int) -> bytes:
    """Encode an item as 4 little endian bytes.

    :param item: The item, a 32 bit unsigned integer.
    :return: The encoded item.
    """
    try:
        return item.to_bytes(4, 'little')
    except OverflowError as ex:
        raise ValueError(f"Items must be 32 bit unsigned integers, got {item}") from ex


def fnv1a(data: bytes, state: int = _FNV_OFFSET_BASIS) -> int:
    """Compute the 64 bit FNV-1a hash of the data.

    :param data: The data.
    :param state: The initial state, the offset basis for a plain hash.
    :return: The hash.
    """
    for byte in data:
        state = ((state ^ byte) * _FNV_PRIME) & _MASK_64

    return state


class RowHasher(abc.ABC):
    """Maps an item to one column for each row of a sketch.
    """
    def __init__(self, rows: int, width: int, seed: int | None = None):
        """Create the hasher.

        :param rows: The number of rows.
        :param width: The number of columns.
        :param seed: The master seed.
        """
        self.rows = rows
        self.width = width
        self.seed = seed

    @abc.abstractmethod
    def columns(self, item: int) -> tuple[int, ...]:
        """Return the column of the item in each row.

        :param item: The item.
        :return: The columns, one for each row.
        """
        raise NotImplementedError()


class XxRowHasher(RowHasher):
    """Seeded xxh64 for each row, reduced to the width by multiply-shift.
    """
    def __init__(self, rows: int, width: int, seed: int):
        """Create the hasher. The row seeds are derived from the master seed and are distinct.

        :param rows: The number of rows.
        :param width: The number of columns.
        :param seed: The master seed.
        """
        super().__init__(rows, width, seed)
        self.row_seeds: list[int] = []
        index = 0
        while len(self.row_seeds) < rows:
            row_seed = xxhash.xxh64_intdigest(index.to_bytes(8, 'little'), seed=seed)
            if row_seed not in self.row_seeds:
                self.row_seeds.append(row_seed)
            index += 1

    def columns(self, item: int) -> tuple[int, ...]:
        data = item_bytes(item)
        width = self.width

        return tuple((xxhash.xxh64_intdigest(data, seed=row_seed) * width) >> 64 for row_seed in self.row_seeds)


class FnvRowHasher(RowHasher):
    """FNV-1a for each row, where each row hashes its own seed before the item.
    """
    def __init__(self, rows: int, width: int, seed: int):
        """Create the hasher.

        :param rows: The number of rows.
        :param width: The number of columns.
        :param seed: The master seed.
        """
        super().__init__(rows, width, seed)
        self.row_states = [fnv1a(((seed + row) & _MASK_64).to_bytes(8, 'little')) for row in range(rows)]

    def columns(self, item: int) -> tuple[int, ...]:
        data = item_bytes(item)
        width = self.width

        return tuple(fnv1a(data, state) % width for state in self.row_states)
