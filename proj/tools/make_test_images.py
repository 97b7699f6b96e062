#!/usr/bin/env python3
"""Regenerates the grayscale test corpus under tests/data/images/.

Sources are sample photographs bundled with scikit-image, converted to
8-bit grayscale binary PGM (P5). Color images use the BT.601 luma
weights. The eval set is ten 512x512 images; the train set is a
disjoint collection of smaller images used for patch sampling.

Usage: python3 tools/make_test_images.py [repo-root]
"""

import os
import sys

import numpy as np
import skimage.data


def to_gray(img):
    if img.ndim == 2:
        return img.astype(np.uint8)
    w = np.array([0.299, 0.587, 0.114])
    return np.clip(np.round(img[..., :3].astype(np.float64) @ w), 0, 255).astype(np.uint8)


def write_pgm(path, img):
    h, w = img.shape
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (w, h))
        f.write(img.tobytes())


def crop(img, top, left, size=512):
    return img[top:top + size, left:left + size]


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..")
    d = skimage.data

    eval_images = {
        "camera": to_gray(d.camera()),
        "moon": to_gray(d.moon()),
        "brick": to_gray(d.brick()),
        "grass": to_gray(d.grass()),
        "gravel": to_gray(d.gravel()),
        "astronaut": to_gray(d.astronaut()),
        "tissue": to_gray(d.immunohistochemistry()),
        "cell": crop(to_gray(d.cell()), 74, 19),
        "galaxies_a": crop(to_gray(d.hubble_deep_field()), 0, 0),
        "galaxies_b": crop(to_gray(d.hubble_deep_field()), 360, 488),
    }
    train_images = {
        "coffee": to_gray(d.coffee()),
        "chelsea": to_gray(d.chelsea()),
        "cat": to_gray(d.cat()),
        "clock": to_gray(d.clock()),
        "coins": to_gray(d.coins()),
        "page": to_gray(d.page()),
        "text": to_gray(d.text()),
        "rocket": to_gray(d.rocket()),
    }

    for subdir, images in (("eval", eval_images), ("train", train_images)):
        out = os.path.join(root, "tests", "data", "images", subdir)
        os.makedirs(out, exist_ok=True)
        for name, img in sorted(images.items()):
            write_pgm(os.path.join(out, name + ".pgm"), img)
            print(f"{subdir}/{name}.pgm  {img.shape[1]}x{img.shape[0]}")


if __name__ == "__main__":
    main()
