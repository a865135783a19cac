"""Segmenter – routes a point prompt to the configured segmenter."""

from spiderforge.segmentation.peer_pool import segment_external
from spiderforge.segmentation.segmenter_kind import SegmenterKind
from spiderforge.segmentation.segmenters import segment_oracle, segment_flood_fill

DEFAULT_COLOR_TOL = 12


class Segmenter:
    def __init__(self, kind, color_tol=DEFAULT_COLOR_TOL, endpoint=None):
        self.kind = SegmenterKind.from_name(kind)
        self.color_tol = color_tol
        self.endpoint = endpoint
        self.dispatch_cache = {}

        if self.kind is SegmenterKind.EXTERNAL and endpoint is None:
            raise ValueError("the external segmenter needs a peer endpoint")

    def segment(self, point, target):
        """target is a SegmentTarget describing the sample the point belongs to."""
        method = self.dispatch_cache.get(self.kind)
        if method is None:
            method = getattr(self, f"segment_{self.kind.slug}")
            self.dispatch_cache[self.kind] = method
        return method(point, target)

    def segment_oracle(self, point, target):
        return segment_oracle(point, target.regions)

    def segment_flood_fill(self, point, target):
        return segment_flood_fill(point, target.load_image(), self.color_tol)

    def segment_external(self, point, target):
        return segment_external(point, target.image_ref, self.endpoint, target.dims, target.request_id)


class SegmentTarget:
    __slots__ = ("request_id", "dims", "regions", "image_ref", "_image", "_loader")

    def __init__(self, request_id, dims, regions=(), image_ref=None, image=None, loader=None):
        self.request_id = request_id
        self.dims = tuple(dims)
        self.regions = list(regions)
        self.image_ref = image_ref
        self._image = image
        self._loader = loader

    def load_image(self):
        if self._image is None:
            if self._loader is None:
                raise ValueError(f"no image available for {self.request_id}")
            self._image = self._loader(self.image_ref)
        return self._image
