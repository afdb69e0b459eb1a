"""The text file format and the command-line front end.

Groups, actions and expected results round-trip through a line-oriented
text format; the same jobs the CLI runs are available programmatically.
"""

from twistedhom import goeritz_e2
from twistedhom.cli import JobSpec, example_to_text, parse_input_file, render_text, run

# Every built-in example serializes to the file format and parses back to
# equal objects. demos/e2.grp ships exactly this text.
text = example_to_text(goeritz_e2())
print(text)

parsed = parse_input_file(text)
assert parsed.presentation == goeritz_e2().presentation
assert parsed.representation == goeritz_e2().representation
print("round trip: ok\n")

# A job bundles a source, a coefficient ring and the computations to run.
# The same thing from a shell:
#
#     twistedhom --example e2 --compute check,h0,coh1,h1,uct,oracle
#     twistedhom demos/e2.grp --ring Z/2 --compute coh1,oracle
#     twistedhom --example e2 --check --format structured
status, records = run(
    JobSpec(example="e2", computations=("check", "h0", "coh1", "h1", "uct", "oracle"))
)
print(render_text(records))
print("\nexit status:", status)

# Structured mode emits the same records as JSON lines; the numeric
# content is identical to the text rendering.
import json

for record in records:
    if record["name"] in ("h1", "oracle"):
        print(json.dumps(record, sort_keys=True))
