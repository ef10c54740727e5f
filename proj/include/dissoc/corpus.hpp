#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dissoc/geniso.hpp"

namespace dissoc {

enum class CorpusClass { Tree, Caterpillar, Unicyclic };

const char* to_string(CorpusClass cls);
CorpusClass parse_corpus_class(const std::string& text);

/// Where the verification suites get their exhaustive graph lists from.
class CorpusSource {
 public:
  virtual ~CorpusSource() = default;
  virtual std::vector<Graph> get(CorpusClass cls, int n) const = 0;

  std::vector<Graph> trees(int n) const { return get(CorpusClass::Tree, n); }
  std::vector<Graph> caterpillars(int n) const { return get(CorpusClass::Caterpillar, n); }
  std::vector<Graph> unicyclic(int n) const { return get(CorpusClass::Unicyclic, n); }
};

/// Runs the generators on every request.
class GeneratedCorpus : public CorpusSource {
 public:
  explicit GeneratedCorpus(GeneratorCaps caps = {}) : caps_(caps) {}
  std::vector<Graph> get(CorpusClass cls, int n) const override;

 private:
  GeneratorCaps caps_;
};

/// Graph6 files under a cache directory, one per (class, order, generator
/// version). Missing entries are generated and written under a per-entry
/// lock file; existing entries are read back.
class CachedCorpus : public CorpusSource {
 public:
  CachedCorpus(std::filesystem::path dir, GeneratorCaps caps = {});
  std::vector<Graph> get(CorpusClass cls, int n) const override;

  std::filesystem::path entry_path(CorpusClass cls, int n) const;

 private:
  std::filesystem::path dir_;
  GeneratedCorpus generator_;
};

struct CorpusHeader {
  CorpusClass cls = CorpusClass::Tree;
  int order = 0;
  std::size_t count = 0;
  int generator_version = kGeneratorVersion;
};

/// "# class=<cls> order=<n> count=<k> generator=<v>" then one graph6 line
/// per graph.
void write_corpus(std::ostream& out, const CorpusHeader& header, const std::vector<Graph>& graphs);
/// Parses the header and every graph; throws std::runtime_error if the
/// count disagrees with the header.
std::vector<Graph> read_corpus(std::istream& in, CorpusHeader* header = nullptr);

}  // namespace dissoc
