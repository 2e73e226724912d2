#!/usr/bin/env python3
"""Regenerates include/idpos/detail/lexicon_data.hpp from data/lexicon.tsv."""
import pathlib

root = pathlib.Path(__file__).resolve().parent.parent
src = root / "data" / "lexicon.tsv"
dst = root / "include" / "idpos" / "detail" / "lexicon_data.hpp"

lines = [l for l in src.read_text().splitlines() if l and not l.startswith("#")]
chunks = []
# Keep each raw string literal well under compiler limits.
for i in range(0, len(lines), 400):
    chunks.append("\n".join(lines[i:i + 400]) + "\n")

out = ["#pragma once", "", "// Generated by tools/gen_lexicon.py from data/lexicon.tsv. Do not edit.", "",
       "#include <array>", "#include <string_view>", "",
       "namespace idpos::detail {", "",
       f"inline constexpr std::array<std::string_view, {len(chunks)}> kLexiconChunks = {{"]
for c in chunks:
    out.append('    R"LEX(' + c + ')LEX",')
out += ["};", "", "} // namespace idpos::detail", ""]
dst.write_text("\n".join(out))
print(f"{len(lines)} entries -> {dst.relative_to(root)}")
