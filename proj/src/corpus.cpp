#include "dissoc/corpus.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dissoc/graph6.hpp"

namespace dissoc {

const char* to_string(CorpusClass cls) {
  switch (cls) {
    case CorpusClass::Tree:
      return "tree";
    case CorpusClass::Caterpillar:
      return "caterpillar";
    case CorpusClass::Unicyclic:
      return "unicyclic";
  }
  return "?";
}

CorpusClass parse_corpus_class(const std::string& text) {
  if (text == "tree") return CorpusClass::Tree;
  if (text == "caterpillar") return CorpusClass::Caterpillar;
  if (text == "unicyclic") return CorpusClass::Unicyclic;
  throw std::invalid_argument("unknown graph class '" + text + "'");
}

std::vector<Graph> GeneratedCorpus::get(CorpusClass cls, int n) const {
  switch (cls) {
    case CorpusClass::Tree:
      return generate_trees(n, caps_);
    case CorpusClass::Caterpillar:
      return generate_caterpillars(n, caps_);
    case CorpusClass::Unicyclic:
      return generate_unicyclic(n, caps_);
  }
  throw std::logic_error("unknown corpus class");
}

void write_corpus(std::ostream& out, const CorpusHeader& header, const std::vector<Graph>& graphs) {
  out << "# class=" << to_string(header.cls) << " order=" << header.order << " count=" << graphs.size()
      << " generator=" << header.generator_version << '\n';
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

std::vector<Graph> read_corpus(std::istream& in, CorpusHeader* header) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("#")) throw std::runtime_error("corpus: missing header line");
  CorpusHeader h;
  std::istringstream fields(line.substr(1));
  for (std::string field; fields >> field;) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "class")
      h.cls = parse_corpus_class(value);
    else if (key == "order")
      h.order = std::stoi(value);
    else if (key == "count")
      h.count = std::stoul(value);
    else if (key == "generator")
      h.generator_version = std::stoi(value);
  }
  std::vector<Graph> graphs;
  while (std::getline(in, line)) {
    if (line.empty() || line.starts_with("#")) continue;
    graphs.push_back(graph6_decode(line));
  }
  if (graphs.size() != h.count)
    throw std::runtime_error("corpus: header promises " + std::to_string(h.count) + " graphs, found " +
                             std::to_string(graphs.size()));
  if (header) *header = h;
  return graphs;
}

CachedCorpus::CachedCorpus(std::filesystem::path dir, GeneratorCaps caps) : dir_(std::move(dir)), generator_(caps) {}

std::filesystem::path CachedCorpus::entry_path(CorpusClass cls, int n) const {
  return dir_ / (std::string(to_string(cls)) + "-n" + std::to_string(n) + "-g" + std::to_string(kGeneratorVersion) +
                 ".g6");
}

namespace {

bool try_read(const std::filesystem::path& path, CorpusClass cls, int n, std::vector<Graph>& out) {
  std::ifstream in(path);
  if (!in) return false;
  CorpusHeader h;
  auto graphs = read_corpus(in, &h);
  if (h.cls != cls || h.order != n || h.generator_version != kGeneratorVersion)
    throw std::runtime_error("corpus cache entry " + path.string() + " does not match its key");
  out = std::move(graphs);
  return true;
}

}  // namespace

std::vector<Graph> CachedCorpus::get(CorpusClass cls, int n) const {
  const auto path = entry_path(cls, n);
  std::vector<Graph> graphs;
  if (try_read(path, cls, n, graphs)) return graphs;

  std::filesystem::create_directories(dir_);
  const auto lock = std::filesystem::path(path.string() + ".lock");
  const int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    // Another process owns the entry; wait briefly for it, else generate
    // without touching the cache.
    for (int i = 0; i < 600 && std::filesystem::exists(lock); ++i)
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    if (try_read(path, cls, n, graphs)) return graphs;
    return generator_.get(cls, n);
  }
  ::close(fd);
  try {
    graphs = generator_.get(cls, n);
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
      std::ofstream out(tmp);
      write_corpus(out, {cls, n, graphs.size(), kGeneratorVersion}, graphs);
      if (!out) throw std::runtime_error("cannot write corpus cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::filesystem::remove(lock);
    throw;
  }
  std::filesystem::remove(lock);
  return graphs;
}

}  // namespace dissoc
