#!/usr/bin/env python3
"""
Validate the Jinja2 plot templates.
Run this after editing anything under templates/.

Usage:
    python scripts/validate_templates.py
"""

import re
import sys
from pathlib import Path

from jinja2 import Environment, FileSystemLoader, TemplateSyntaxError, UndefinedError

# Guardrail: keep logic in Python, not in the templates
BUILTIN_FUNCTIONS = ["str", "int", "len", "dict", "list", "bool", "float", "type", "getattr", "round"]

SAMPLE_CONTEXT = {
    "width": 640,
    "height": 480,
    "margin": 48,
    "title": "sample",
    "points": [{"x": 100.0, "y": 100.0, "r": 17, "color": "#1f77b4"}],
    "legend": [{"residue": 1, "color": "#1f77b4"}],
    "x_axis": 240.0,
    "y_axis": None,
    "x_range": (-1.0, 1.0),
    "y_range": (-1.0, 1.0),
}


def builtin_calls(source: str) -> list[str]:
    hits = []
    for name in BUILTIN_FUNCTIONS:
        # \b so that e.g. parseInt( does not count as int(
        if re.search(r"\b" + re.escape(name) + r"\s*\(", source):
            hits.append(name)
    return hits


def validate_templates() -> bool:
    templates_dir = Path(__file__).parent.parent / "templates"
    if not templates_dir.exists():
        print(f"Error: Templates directory not found: {templates_dir}")
        return False

    template_files = sorted(templates_dir.glob("*.j2"))
    if not template_files:
        print("No template files found.")
        return False

    print(f"Validating {len(template_files)} template(s)...\n")
    env = Environment(loader=FileSystemLoader(str(templates_dir)))
    errors = []

    for template_file in template_files:
        hits = builtin_calls(template_file.read_text(encoding="utf-8"))
        if hits:
            msg = f"Python builtins {', '.join(hits)} used. Move this logic into app/gauss/plot.py."
            print(f"ERROR {template_file.name}\n  {msg}")
            errors.append((template_file.name, msg))
            continue
        try:
            env.get_template(template_file.name).render(**SAMPLE_CONTEXT)
            print(f"OK {template_file.name}")
        except TemplateSyntaxError as e:
            print(f"ERROR {template_file.name}\n  Line {e.lineno}: {e.message}")
            errors.append((template_file.name, e))
        except UndefinedError as e:
            print(f"ERROR {template_file.name}\n  {e}")
            errors.append((template_file.name, e))

    print()
    if errors:
        print(f"ERROR: Found {len(errors)} template error(s):")
        for filename, error in errors:
            print(f"  - {filename}: {error}")
        return False
    print("SUCCESS: All templates render with the sample context.")
    return True


if __name__ == "__main__":
    sys.exit(0 if validate_templates() else 1)
