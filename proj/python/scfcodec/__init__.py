"""Lossless screen-content codec (soft context formation)."""

try:
    from scfcodec._scfcodec import (  # installed package layout
        CorruptStreamError,
        IoError,
        decode_rgb8,
        encode_rgb8,
        encode_rgb8_with_stats,
        read_ppm,
        write_ppm,
    )
except ImportError:  # extension built in-tree next to the package
    from _scfcodec import (
        CorruptStreamError,
        IoError,
        decode_rgb8,
        encode_rgb8,
        encode_rgb8_with_stats,
        read_ppm,
        write_ppm,
    )

__version__ = "0.1.0"

__all__ = [
    "CorruptStreamError",
    "IoError",
    "decode_rgb8",
    "encode_rgb8",
    "encode_rgb8_with_stats",
    "read_ppm",
    "write_ppm",
]
