"""Binary snapshots of FDCMSS sketches.

All values are little endian. The header holds the magic bytes, whose last byte is the format version, the dimensions,
the landmark and the total raw count, followed by the parameters needed to rebuild the sketch; the cells follow row by
row, each as two (item, count) counters.
"""
import logging
import pathlib
import struct

import pydantic

from fdcmss import decay, enums, exceptions, hashing, models
from fdcmss.sketch.fdcmss import FdcmssSketch

# The module logger
logger = logging.getLogger(__name__)

# The magic bytes, format version 1
MAGIC = b'FDC1'

# magic, d, w, landmark, count, then decay code, decay parameter, ε, δ, φ, t_init, seed
_HEADER = struct.Struct('<4sIIddBdddddQ')

# Two counters of item and count
_CELL = struct.Struct('<IdId')


def to_bytes(sketch: FdcmssSketch) -> bytes:
    """Serialize a sketch.

    :param sketch: The sketch, built with the default seeded hasher.
    :return: The snapshot.
    """
    if not isinstance(sketch.hasher, hashing.XxRowHasher):
        raise exceptions.UnsupportedOperationError("Only sketches with seeded xxh64 row hashes can be serialized")
    params = sketch.params
    parts = [_HEADER.pack(
        MAGIC, sketch.rows, sketch.columns, sketch.landmark, sketch.count, sketch.decay_spec.kind.code,
        sketch.decay_spec.parameter, params.epsilon, params.delta, params.phi, params.t_init, sketch.seed
    )]
    for row in sketch.cells:
        for cell in row:
            counters = cell.counters()
            parts.append(_CELL.pack(counters[0].item, counters[0].count, counters[1].item, counters[1].count))

    return b''.join(parts)


def from_bytes(data: bytes) -> FdcmssSketch:
    """Deserialize a sketch.

    :param data: The snapshot.
    :return: The sketch.
    """
    if len(data) < _HEADER.size:
        raise exceptions.SnapshotFormatError(f"Snapshot too short: {len(data)} bytes")
    (
        magic, rows, columns, landmark, count, decay_code, decay_parameter, epsilon, delta, phi, t_init, seed
    ) = _HEADER.unpack_from(data)
    if magic[:3] == MAGIC[:3] and magic != MAGIC:
        raise exceptions.SnapshotFormatError(f"Unsupported snapshot version {magic[3:]!r}")
    if magic != MAGIC:
        raise exceptions.SnapshotFormatError(f"Bad magic bytes {magic!r}")
    if rows < 1 or columns < 1:
        raise exceptions.SnapshotFormatError(f"Invalid dimensions {rows} × {columns}")
    expected = _HEADER.size + rows * columns * _CELL.size
    if len(data) != expected:
        raise exceptions.SnapshotFormatError(f"Snapshot has {len(data)} bytes, expected {expected}")

    try:
        kind = enums.DecayKind.from_code(decay_code)
        params = models.SketchParams(
            epsilon=epsilon, delta=delta, phi=phi, t_init=t_init,
            decay=models.DecaySpec(kind=kind, parameter=decay_parameter, landmark=t_init),
        )
    except (ValueError, pydantic.ValidationError) as ex:
        raise exceptions.SnapshotFormatError(f"Invalid snapshot parameters: {ex}") from ex

    sketch = FdcmssSketch(params, seed=seed, rows=rows, columns=columns)
    sketch.decay_spec = decay.rebased(sketch.decay_spec, landmark)
    sketch.count = count
    offset = _HEADER.size
    for row in sketch.cells:
        for cell in row:
            first_item, first_count, second_item, second_count = _CELL.unpack_from(data, offset)
            offset += _CELL.size
            for index, (item, item_count) in enumerate(((first_item, first_count), (second_item, second_count))):
                if item_count > 0:
                    cell.items[index] = item
                    cell.counts[index] = item_count
            cell.offered_total = first_count + second_count
    logger.debug("Loaded snapshot of %s", sketch)

    return sketch


def dump(sketch: FdcmssSketch, path: pathlib.Path):
    """Write a sketch snapshot to a file.

    :param sketch: The sketch.
    :param path: The file path.
    """
    path.write_bytes(to_bytes(sketch))


def load(path: pathlib.Path) -> FdcmssSketch:
    """Read a sketch snapshot from a file.

    :param path: The file path.
    :return: The sketch.
    """
    return from_bytes(path.read_bytes())
