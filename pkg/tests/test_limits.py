import numpy as np
import pytest

from faceideal.face_ideal import verify_duality_theorem
from faceideal.limits import SizeLimitError, desk_limit, require

from helpers import cx


def test_require(monkeypatch):
    monkeypatch.delenv("FACEIDEAL_MAX_N", raising=False)
    require(5, 5, "n")
    with pytest.raises(SizeLimitError, match="n = 6 exceeds the limit 5"):
        require(6, 5, "n")


def test_override(monkeypatch):
    monkeypatch.setenv("FACEIDEAL_MAX_N", "13")
    assert desk_limit(12) == 13
    assert desk_limit(20) == 20
    assert verify_duality_theorem(cx(13, (1, 2), (3,))).equal
    with pytest.raises(SizeLimitError, match="limit 62"):
        require(63, 62, "bits", hard=True)
    monkeypatch.setenv("FACEIDEAL_MAX_N", "lots")
    with pytest.raises(SizeLimitError, match="integer"):
        desk_limit(3)


def test_exact_rank_overflow_is_reported(kernels):
    big = np.array([[2**40, 3], [5, 2**40 + 7], [7, 11]], dtype=np.int64)
    assert kernels.exact_rank(big.copy(), 0) in (-1, 2)
    huge = np.array([[2**62 - 1, 1], [3, 2**62 - 3]], dtype=np.int64)
    assert kernels.exact_rank(huge, 0) == -1
