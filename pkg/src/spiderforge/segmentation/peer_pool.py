"""PeerPool – a fixed set of peers, each serving one request at a time."""

import logging
from contextlib import contextmanager
from queue import Queue

from spiderforge.core.errors import PeerUnreachable
from spiderforge.segmentation.peer import DEFAULT_PEER_TIMEOUT, ExternalPeer

logger = logging.getLogger(__name__)


class PeerPool:
    def __init__(self, command, size=1, timeout=DEFAULT_PEER_TIMEOUT):
        if size < 1:
            raise ValueError(f"a peer pool needs at least one peer, got {size}")

        self._idle = Queue()
        self._peers = []

        try:
            for _ in range(size):
                peer = ExternalPeer(command, threaded=size > 1, timeout=timeout)
                self._peers.append(peer)
                self._idle.put(peer)
        except PeerUnreachable:
            self.close()
            raise

        logger.info("peer pool ready with %d peers", size)

    @property
    def size(self):
        return len(self._peers)

    @contextmanager
    def checkout(self):
        peer = self._idle.get()
        try:
            yield peer
        finally:
            self._idle.put(peer)

    def segment(self, point, image_ref, dims, request_id):
        with self.checkout() as peer:
            return peer.segment(point, image_ref, dims, request_id)

    def close(self):
        for peer in self._peers:
            peer.close()
        self._peers = []

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False


def segment_external(point, image_ref, endpoint, dims, request_id):
    """endpoint is an ExternalPeer or a PeerPool."""
    return endpoint.segment(point, image_ref, dims, request_id)
