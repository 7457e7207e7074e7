"""
Empirical linear statistics with block jackknife errors

Draws are split into blocks; block b uses the b-th child of
SeedSequence(seed), so the result does not depend on the number of worker
threads.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from config.settings import get_settings

from ..errors import DomainError
from ..expansion.smooth_input import SmoothInput
from .models import EmpiricalStatistics
from .sampler import GueSampler

logger = logging.getLogger(__name__)

MIN_DRAWS = 100
MIN_BLOCKS = 20

# matrix entries held in memory at once per block
CHUNK_ENTRIES = 4_000_000


def block_layout(draws: int, block: int = None) -> List[int]:
    """Block sizes for `draws` draws: at most `block` each, at least MIN_BLOCKS blocks"""
    block = block or get_settings().mc_block
    size = max(1, min(block, draws // MIN_BLOCKS))
    sizes = [size] * (draws // size)
    if draws % size:
        sizes.append(draws % size)
    return sizes


def _block_sums(sampler: GueSampler, f: SmoothInput, g: SmoothInput, count: int, seq: np.random.SeedSequence):
    """(sum Tr f, sum Tr g, sum Tr f Tr g, count) over one block"""
    rng = np.random.default_rng(seq)
    chunk = max(1, CHUNK_ENTRIES // (sampler.n * sampler.n))
    spectra = np.concatenate(
        [sampler.sample_spectra(min(chunk, count - start), rng) for start in range(0, count, chunk)]
    )
    tf = np.sum(np.asarray(f.value(spectra)), axis=1)
    tg = tf if g is f else np.sum(np.asarray(g.value(spectra)), axis=1)
    return np.sum(tf), np.sum(tg), np.sum(tf * tg), count


def _jackknife(blocks: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Delete-one-block estimates of (E Tr f, E Tr g, Cov)

    blocks has rows (sum f, sum g, sum fg, count).
    """
    totals = blocks.sum(axis=0)
    rest = totals[None, :] - blocks
    mf = rest[:, 0] / rest[:, 3]
    mg = rest[:, 1] / rest[:, 3]
    cov = rest[:, 2] / rest[:, 3] - mf * mg
    return np.stack([mf, mg, cov], axis=1), totals


def _stderr(estimates: np.ndarray) -> float:
    b = len(estimates)
    spread = np.abs(estimates - estimates.mean()) ** 2
    return float(math.sqrt((b - 1) / b * np.sum(spread)))


def _number(value):
    return complex(value) if np.iscomplexobj(value) else float(value)


def empirical_statistics(
    sampler: GueSampler,
    f: SmoothInput,
    g: SmoothInput = None,
    draws: int = 10_000,
    block: int = None,
    threads: int = None,
    progress: bool = False,
) -> EmpiricalStatistics:
    """
    Monte Carlo estimates of E{tr_n f(X_n)} and Cov{Tr_n f(X_n), Tr_n g(X_n)}

    Args:
        sampler: GUE sampler; its seed determines the result
        f: First statistic
        g: Second statistic (defaults to f)
        draws: Number of matrices, >= 100
        block: Maximum draws per jackknife block (GUE_EXPAND_MC_BLOCK)
        threads: Worker threads (GUE_EXPAND_THREADS)
        progress: Show a progress bar on stderr

    Returns:
        EmpiricalStatistics with jackknife standard errors
    """
    if draws < MIN_DRAWS:
        raise DomainError(f"At least {MIN_DRAWS} draws are needed, got {draws}")
    g = f if g is None else g
    threads = max(1, threads or get_settings().threads)
    sizes = block_layout(draws, block)
    seeds = np.random.SeedSequence(sampler.seed).spawn(len(sizes))

    logger.info(f"Sampling {draws} draws of {sampler} in {len(sizes)} blocks on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        jobs = pool.map(lambda args: _block_sums(sampler, f, g, *args), zip(sizes, seeds))
        rows = list(tqdm(jobs, total=len(sizes), desc="mc blocks", disable=not progress))

    blocks = np.array(rows, dtype=complex)
    estimates, totals = _jackknife(blocks)
    count = totals[3].real
    mean_tr_f = totals[0] / count
    mean_tr_g = totals[1] / count
    cov = totals[2] / count - mean_tr_f * mean_tr_g
    if not np.iscomplexobj(f.value(np.zeros(1))) and not np.iscomplexobj(g.value(np.zeros(1))):
        mean_tr_f, mean_tr_g, cov = mean_tr_f.real, mean_tr_g.real, cov.real

    n = sampler.n
    return EmpiricalStatistics(
        n=n,
        sigma2=sampler.sigma2,
        seed=sampler.seed,
        draws=draws,
        blocks=len(sizes),
        f=f.name,
        g=g.name,
        mean_f=_number(mean_tr_f / n),
        mean_f_stderr=_stderr(estimates[:, 0]) / n,
        mean_g=_number(mean_tr_g / n),
        cov_fg=_number(cov),
        cov_stderr=_stderr(estimates[:, 2]),
    )
