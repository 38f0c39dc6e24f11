"""Rewrite the bundled dataset files under src/stors/datasets/.

    python scripts/regenerate_datasets.py
"""

from stors.datasets import regenerate

if __name__ == "__main__":
    for path in regenerate():
        print(path)
