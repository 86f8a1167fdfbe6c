#include "rearr/pairfile.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

[[noreturn]] void fail_at(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

RawGenome::RawGene parse_gene_token(const std::string& tok, int line) {
  if (tok.empty()) fail_at(line, "empty gene token");
  bool forward = true;
  std::string name = tok;
  if (tok[0] == '+') {
    name = tok.substr(1);
  } else if (tok[0] == '-' || tok[0] == '~') {
    forward = false;
    name = tok.substr(1);
  }
  if (name.empty()) fail_at(line, "gene token '" + tok + "' has no name");
  return {name, forward};
}

struct Block {
  std::optional<std::vector<RawGenome::RawGene>> genes;
  std::optional<std::vector<Nucleotides>> regions;
  int genes_line = 0;
};

RawGenome finish_block(const std::string& label, const Block& b) {
  if (!b.genes) throw std::invalid_argument(label + " block is missing its genes: line");
  if (!b.regions) throw std::invalid_argument(label + " block is missing its intergenic: line");
  if (b.regions->size() != b.genes->size() + 1)
    throw std::invalid_argument(label + " needs " + std::to_string(b.genes->size() + 1) +
                                " intergenic values, got " + std::to_string(b.regions->size()));
  return RawGenome{*b.genes, *b.regions};
}

}  // namespace

NormalizedPair parse_pair_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw_line;
  int line_no = 0;
  Block source, target;
  Block* current = nullptr;
  std::string current_label;

  while (std::getline(in, raw_line)) {
    ++line_no;
    const size_t hash = raw_line.find('#');
    std::string line = hash == std::string::npos ? raw_line : raw_line.substr(0, hash);
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;

    if (toks[0] == ">source" || toks[0] == ">target") {
      current = toks[0] == ">source" ? &source : &target;
      current_label = toks[0].substr(1);
      if (toks.size() > 1) fail_at(line_no, "unexpected text after " + toks[0]);
      continue;
    }
    if (!current) fail_at(line_no, "content before any >source/>target header");

    if (toks[0] == "genes:") {
      if (current->genes) fail_at(line_no, "second genes: line in " + current_label);
      std::vector<RawGenome::RawGene> genes;
      for (size_t i = 1; i < toks.size(); ++i) genes.push_back(parse_gene_token(toks[i], line_no));
      current->genes = std::move(genes);
      current->genes_line = line_no;
    } else if (toks[0] == "intergenic:") {
      if (current->regions) fail_at(line_no, "second intergenic: line in " + current_label);
      std::vector<Nucleotides> regions;
      for (size_t i = 1; i < toks.size(); ++i) {
        long long v = 0;
        bool ok = false;
        try {
          size_t used = 0;
          v = std::stoll(toks[i], &used);
          ok = used == toks[i].size();
        } catch (const std::exception&) {
        }
        if (!ok) fail_at(line_no, "bad intergenic value '" + toks[i] + "'");
        if (v < 0) fail_at(line_no, "negative intergenic value " + toks[i]);
        regions.push_back(v);
      }
      current->regions = std::move(regions);
    } else {
      fail_at(line_no, "expected genes: or intergenic:, got '" + toks[0] + "'");
    }
  }

  const RawGenome raw_source = finish_block("source", source);
  const RawGenome raw_target = finish_block("target", target);
  return normalize_pair(raw_source, raw_target);
}

NormalizedPair load_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open pair file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pair_text(buf.str());
}

std::string write_pair_text(const NormalizedPair& pair) {
  std::ostringstream out;
  out << ">source\ngenes:";
  for (int g : pair.source.genes) {
    if (g == kAlpha)
      out << " alpha";
    else if (g > 0)
      out << " +" << g;
    else
      out << " -" << -g;
  }
  out << "\nintergenic:";
  for (Nucleotides r : pair.source.regions) out << ' ' << r;
  out << "\n>target\ngenes:";
  for (int g : pair.target.genes) out << " +" << g;
  out << "\nintergenic:";
  for (Nucleotides r : pair.target.regions) out << ' ' << r;
  out << '\n';
  return out.str();
}

}  // namespace rearr
