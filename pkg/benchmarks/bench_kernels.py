"""Compare the compiled kernels with their NumPy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat N]

Shapes follow the default model: 32x32 pooled rasters through the first
convolution layer, and 64x64 scene rasters with a few dozen vehicle boxes.
Outputs of both backends are checked for equality before timing.
"""
import argparse
import sys
import timeit

import numpy as np

from rlrn.nd import _pykernels

try:
    from rlrn.nd import _ckernels
except ImportError:
    sys.exit("the compiled extension is not built; run `pip install -e . --no-build-isolation` first")


def cases(rng):
    x = rng.random((256, 32, 32, 3), dtype=np.float32)
    cols = np.ascontiguousarray(_pykernels.im2col(x, 3, 2, 1))
    boxes = np.column_stack([rng.uniform(-18, 18, (40, 2)), rng.uniform(-np.pi, np.pi, 40),
                             np.full(40, 4.5), np.full(40, 1.8)])
    values = rng.integers(1, 256, 40).astype(np.uint8)

    def fill(mod):
        grid = np.zeros((64, 64), np.uint8)
        mod.fill_boxes(grid, boxes, 20.0, values)
        return grid

    return {
        "im2col  (256x32x32x3, k3 s2)": lambda mod: mod.im2col(x, 3, 2, 1),
        "col2im  (256x32x32x3, k3 s2)": lambda mod: mod.col2im(cols, 256, 32, 32, 3, 3, 2, 1),
        "fill_boxes (64x64, 40 boxes)": fill,
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=20)
    args = p.parse_args(argv)
    rng = np.random.default_rng(0)
    print(f"{'kernel':32s} {'python ms':>10s} {'cython ms':>10s} {'speed-up':>9s}")
    for name, fn in cases(rng).items():
        if not np.array_equal(fn(_pykernels), fn(_ckernels)):
            sys.exit(f"{name}: backends disagree")
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat)) * 1e3
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32s} {t_py:10.3f} {t_c:10.3f} {t_py / t_c:8.1f}x")


if __name__ == "__main__":
    main()
