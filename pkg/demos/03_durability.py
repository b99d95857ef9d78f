"""The append-only log: updates, deletes, a crash, and a clean reopen.

Run: python demos/03_durability.py
"""

import tempfile
from pathlib import Path

from phonosearch.engine import RecordSearchEngine
from phonosearch.store import OP_INSERT, pack_entry

with tempfile.TemporaryDirectory() as data_dir:
    engine = RecordSearchEngine(data_dir)
    pointer = engine.insert(0, ("Abdullah", "Khulna", "Chandpur", "Haimchar",
                                "Naikhong", "Gorea", "Employee", "8801700041114"))
    engine.update(pointer, ("Abdullah", "Dhaka", "Chandpur", "Haimchar",
                            "Naikhong", "Gorea", "Employee", "8801700041114"))
    engine.close()

    log = Path(data_dir) / "citizen.log"
    print(f"{log.name} holds one entry per operation "
          f"({log.stat().st_size} bytes for insert+update)")

    # simulate a crash half-way through a later write
    with open(log, "ab") as f:
        f.write(pack_entry(OP_INSERT, 2, ("torn",) * 8)[:-6])
    print("appended a torn half-entry, as a crash mid-write would")

    engine = RecordSearchEngine(data_dir)
    record = engine.retrieve(pointer)
    print(f"reopened: record 1 is intact with the updated value {record.fields[1]!r}")
    fresh = engine.insert(0, ("Rahim", "Rangpur", "Dinajpur", "Birganj",
                              "Mohanpur", "Rampur", "Farmer", "8801700012345"))
    print(f"the torn entry was truncated away; the next insert got a fresh "
          f"p_value {fresh.p_value} and the log stays aligned")
    engine.close()
