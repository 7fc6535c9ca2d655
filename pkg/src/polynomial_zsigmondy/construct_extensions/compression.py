import construct

# zstd level of every archive body
ARCHIVE_LEVEL = 15


class CompressedZSTD(construct.Tunnel):
    """Zstandard-compressed body. Reads to the end of the stream, so it must be the last field."""

    def __init__(self, subcon, level: int = 3):
        super().__init__(subcon)
        import zstandard

        self.lib = zstandard
        self.level = level

    def _decode(self, data, context, path):
        try:
            return self.lib.decompress(data)
        except self.lib.ZstdError as e:
            raise construct.StreamError(f"corrupt zstd body: {e}", path=path) from e

    def _encode(self, data, context, path):
        return self.lib.compress(data, self.level)
