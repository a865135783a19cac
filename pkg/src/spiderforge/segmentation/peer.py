"""ExternalPeer – a spawned point-prompted segmentation process spoken to over its standard streams."""

import logging
import shlex
import subprocess
from queue import Empty, Queue
from threading import Lock, Thread

from spiderforge.core.errors import PeerUnreachable
from spiderforge.core.util import _NoLock
from spiderforge.segmentation.protocol import encode_request, decode_response

logger = logging.getLogger(__name__)

DEFAULT_PEER_TIMEOUT = 60.0
_EOF = ""


class ExternalPeer:
    def __init__(self, command, threaded=True, timeout=DEFAULT_PEER_TIMEOUT):
        self.command = shlex.split(command) if isinstance(command, str) else list(command)
        self.timeout = timeout
        self._lock = Lock() if threaded else _NoLock()
        self._lines = Queue()

        try:
            self._proc = subprocess.Popen(
                self.command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                encoding="utf-8",
                bufsize=1,
            )
        except OSError as e:
            raise PeerUnreachable(f"could not start peer {self.command!r}: {e}") from e

        self._reader = Thread(target=self._pump, name=f"peer-{self._proc.pid}", daemon=True)
        self._reader.start()
        logger.debug("started peer pid %d: %s", self._proc.pid, " ".join(self.command))

    def _pump(self):
        try:
            for line in self._proc.stdout:
                self._lines.put(line)
        except (OSError, ValueError):
            pass
        self._lines.put(_EOF)

    @property
    def alive(self):
        return self._proc.poll() is None

    def request(self, line):
        """Sends one request line and returns the raw response line."""
        with self._lock:
            if not self.alive:
                raise PeerUnreachable(f"peer exited with code {self._proc.returncode}")

            try:
                self._proc.stdin.write(line + "\n")
                self._proc.stdin.flush()
            except (BrokenPipeError, OSError) as e:
                raise PeerUnreachable(f"lost connection to peer: {e}") from e

            try:
                response = self._lines.get(timeout=self.timeout)
            except Empty:
                # a late answer would pair with the next request
                self._proc.kill()
                raise PeerUnreachable(f"peer did not answer within {self.timeout:g}s") from None

        if response == _EOF:
            raise PeerUnreachable("peer closed its output before answering")
        return response

    def segment(self, point, image_ref, dims, request_id):
        line = encode_request(request_id, image_ref, point, dims)
        return decode_response(self.request(line), request_id, dims)

    def close(self):
        if self._proc.stdin and not self._proc.stdin.closed:
            try:
                self._proc.stdin.close()
            except OSError:
                pass

        try:
            self._proc.wait(timeout=5)
        except subprocess.TimeoutExpired:
            self._proc.kill()
            self._proc.wait()

        self._reader.join(timeout=5)
        if self._proc.stdout:
            self._proc.stdout.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False
