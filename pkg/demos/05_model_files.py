"""Model definition files: the line-oriented format the CLI consumes,
round-tripping, and running pipelines programmatically.

Run:  python demos/05_model_files.py
"""

from gvc.cli import run
from gvc.modelfile import parse_model, render_model
from gvc.presets import PRESET_MODEL_TEXT

text = PRESET_MODEL_TEXT["su2"]
print("A model file has four sections:")
print(text)

spec = parse_model(text)
print("Rendering the parsed spec reproduces the canonical text:",
      render_model(spec) == text)

print()
print("Pipelines run straight from the spec; `validate-algebra` needs no")
print("model build at all:")
report = run(spec, "validate-algebra", deterministic=True)
print(report.render())

print("A deliberately broken bracket is rejected with the exact triple:")
broken = text.replace("c e3 e1 e2 = 1", "c e3 e1 e2 = 1\nc e2 e1 e2 = 1")
report = run(parse_model(broken), "validate-algebra", deterministic=True)
print(report.render())
