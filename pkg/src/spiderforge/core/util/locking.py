"""No-op lock – stands in for a real lock when a peer is only ever used from one thread."""


class _NoLock:
    __slots__ = ()

    def __enter__(self):
        return self

    def __exit__(self, *args):
        pass
