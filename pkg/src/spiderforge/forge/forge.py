"""TaskForge – composes the forge mixins and fans samples out over a process pool."""

import logging
from concurrent.futures import ProcessPoolExecutor

from tqdm import tqdm

from spiderforge.forge.mixins import (
    ForgeBase,
    ForgeDescriptions,
    ForgeGrounding,
    ForgeReferring,
)

logger = logging.getLogger(__name__)


class TaskForge(
    ForgeBase,
    ForgeDescriptions,
    ForgeGrounding,
    ForgeReferring,
):
    pass


_worker_forge = None


def _init_worker(settings):
    global _worker_forge
    _worker_forge = TaskForge(settings)


def _forge_in_worker(index):
    return _worker_forge.forge_sample(index)


def forge_samples(settings, count, workers=1, progress=False):
    """Yields (SampleRecord, ImageBuffer) for indices 0..count-1 in index order.

    Every sample draws from its own seed stream, so the output does not
    depend on the worker count.
    """
    bar = tqdm(total=count, desc="forge", unit="sample", disable=not progress)

    try:
        if workers <= 1:
            forge = TaskForge(settings)
            for index in range(count):
                yield forge.forge_sample(index)
                bar.update(1)
            return

        logger.info("forging %d samples on %d workers", count, workers)
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(settings,)
        ) as pool:
            for result in pool.map(_forge_in_worker, range(count), chunksize=4):
                yield result
                bar.update(1)
    finally:
        bar.close()
