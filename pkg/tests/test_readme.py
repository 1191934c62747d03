import re
from pathlib import Path


def test_quick_start_block_runs_verbatim():
    readme = (Path(__file__).parent.parent / "README.md").read_text()
    blocks = re.findall(r"```python\n(.*?)```", readme, flags=re.S)
    assert blocks, "README lost its quick-start block"
    for block in blocks:
        exec(compile(block, "<README>", "exec"), {})
