#!/usr/bin/env python3
"""Script to write the preset corpus of quasitoric input files with their characteristic numbers."""

import json
import sys
from pathlib import Path

from qtoric.models.input_file import write_input
from qtoric.services.quasitoric_service import (
    char_function,
    preset_cpn,
    preset_hirzebruch,
    product,
)


def main():
    """Write presets and a summary of their characteristic numbers."""
    print("🔄 Generating preset corpus...")

    try:
        presets_dir = Path("presets")
        presets_dir.mkdir(exist_ok=True)

        cp1, cp2 = preset_cpn(1), preset_cpn(2)
        corpus = [preset_cpn(n) for n in range(1, 5)]
        corpus += [preset_hirzebruch(a) for a in range(4)]
        corpus += [product(cp1, cp1), product(cp1, cp2), product(product(cp1, cp1), cp1)]

        summary = {}
        for d in corpus:
            write_input(d, presets_dir / f"{d.name}.json")
            summary[d.name] = char_function(d).values
            print(f"   - {d.name}: m={d.m}, {d.vertex_count} vertices, {len(d.facets)} facets")

        summary_file = presets_dir / "charnums.json"
        with summary_file.open("w", encoding="utf-8") as f:
            json.dump(summary, f, indent=2)
            f.write("\n")

        print(f"✅ Wrote {len(corpus)} presets and {summary_file}")

    except Exception as e:
        print(f"❌ Error generating presets: {e}", file=sys.stderr)
        sys.exit(1)


if __name__ == "__main__":
    main()
