#include "dspc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "dspc/errors.hpp"

namespace dspc {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t to_int(std::string_view token, int line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Iterates lines with 1-based numbers.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++number;
    fn(number, text.substr(pos, end - pos));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  std::vector<std::string> comments;
  bool transformed = false;
  bool have_header = false;
  int header_line = 0;
  std::int64_t n = 0, m = 0, k = 0, c = 0;
  CongestionMode mode = CongestionMode::kVertex;
  std::vector<Edge> edges;
  std::vector<Demand> demands;
  std::vector<std::pair<VertexId, std::string>> labels;

  auto check_id = [&](std::int64_t v, int line) {
    if (v < 1 || v > n) throw ParseError(line, "vertex id " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<VertexId>(v);
  };

  for_each_line(text, [&](int line, std::string_view raw) {
    const auto tokens = split_tokens(raw);
    if (tokens.empty()) return;
    const std::string_view kind = tokens[0];
    if (kind == "c") {
      const std::size_t at = raw.find('c');
      std::string body(raw.substr(at + 1));
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.pop_back();
      if (tokens.size() == 2 && tokens[1] == "transformed") {
        transformed = true;
      } else if (tokens.size() >= 3 && tokens[1] == "label") {
        const std::int64_t v = to_int(tokens[2], line);
        const std::size_t label_at = body.find(tokens[2]) + tokens[2].size();
        std::string label = label_at < body.size() ? body.substr(label_at + 1) : std::string();
        labels.emplace_back(static_cast<VertexId>(v), std::move(label));
      } else {
        comments.push_back(std::move(body));
      }
      return;
    }
    if (kind == "p") {
      if (have_header) throw ParseError(line, "duplicate problem line");
      if (tokens.size() != 7 || tokens[1] != "dsp") {
        throw ParseError(line, "expected 'p dsp <n> <m> <k> <c> <mode>'");
      }
      n = to_int(tokens[2], line);
      m = to_int(tokens[3], line);
      k = to_int(tokens[4], line);
      c = to_int(tokens[5], line);
      auto parsed = parse_mode(tokens[6]);
      if (!parsed) throw ParseError(line, "mode must be 'vertex' or 'edge'");
      mode = *parsed;
      if (n < 1 || m < 0 || k < 1 || c < 1) throw ParseError(line, "header counts out of range");
      have_header = true;
      header_line = line;
      return;
    }
    if (!have_header) throw ParseError(line, "data line before the problem line");
    if (kind == "a") {
      if (tokens.size() != 4) throw ParseError(line, "expected 'a <u> <v> <w>'");
      if (static_cast<std::int64_t>(edges.size()) == m) throw ParseError(line, "more arcs than declared");
      const VertexId u = check_id(to_int(tokens[1], line), line);
      const VertexId v = check_id(to_int(tokens[2], line), line);
      const std::int64_t w = to_int(tokens[3], line);
      if (w < 0 || (w == 0 && !transformed)) {
        throw ParseError(line, "weight " + std::to_string(w) + " not allowed");
      }
      edges.push_back({u, v, w});
      return;
    }
    if (kind == "d") {
      if (tokens.size() != 3) throw ParseError(line, "expected 'd <s> <t>'");
      if (static_cast<std::int64_t>(demands.size()) == k) throw ParseError(line, "more demands than declared");
      demands.push_back({check_id(to_int(tokens[1], line), line), check_id(to_int(tokens[2], line), line)});
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(kind) + "'");
  });

  if (!have_header) throw ParseError(1, "missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(header_line, "declared " + std::to_string(m) + " arcs, found " + std::to_string(edges.size()));
  }
  if (static_cast<std::int64_t>(demands.size()) != k) {
    throw ParseError(header_line,
                     "declared " + std::to_string(k) + " demands, found " + std::to_string(demands.size()));
  }
  std::vector<std::string> label_table;
  if (!labels.empty()) {
    label_table.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto& [v, text_label] : labels) {
      if (v < 1 || v > n) throw Error(ErrorCode::kInvariantViolation, "label for unknown vertex");
      label_table[static_cast<std::size_t>(v)] = std::move(text_label);
    }
  }
  Dag dag(static_cast<VertexId>(n), std::move(edges), transformed, std::move(label_table));
  return InstanceFile{Instance(std::move(dag), std::move(demands), static_cast<int>(c), mode),
                      std::move(comments)};
}

std::string format_instance(const Instance& inst, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& comment : comments) out << "c " << comment << '\n';
  if (inst.dag.transformed()) out << "c transformed\n";
  for (VertexId v = 1; v <= inst.dag.vertex_count(); ++v) {
    const auto& label = inst.dag.label(v);
    if (!label.empty()) out << "c label " << v << ' ' << label << '\n';
  }
  out << "p dsp " << inst.dag.vertex_count() << ' ' << inst.dag.edge_count() << ' ' << inst.k()
      << ' ' << inst.congestion << ' ' << mode_name(inst.mode) << '\n';
  for (const Edge& e : inst.dag.edges()) out << "a " << e.tail << ' ' << e.head << ' ' << e.weight << '\n';
  for (const Demand& d : inst.demands) out << "d " << d.source << ' ' << d.terminal << '\n';
  return out.str();
}

std::string format_solution(const std::optional<Solution>& sol) {
  std::ostringstream out;
  if (!sol) {
    out << "s 0\n";
    return out.str();
  }
  out << "s 1\n";
  for (std::size_t i = 0; i < sol->paths.size(); ++i) {
    const Path& p = sol->paths[i];
    out << "p " << i + 1 << ' ' << p.length;
    for (VertexId v : p.vertices) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::optional<Solution> parse_solution(std::string_view text) {
  int status = -1;
  Solution sol;
  for_each_line(text, [&](int line, std::string_view raw) {
    const auto tokens = split_tokens(raw);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "s") {
      if (status != -1) throw ParseError(line, "duplicate status line");
      if (tokens.size() != 2 || (tokens[1] != "0" && tokens[1] != "1")) {
        throw ParseError(line, "expected 's 0' or 's 1'");
      }
      status = tokens[1] == "1" ? 1 : 0;
      return;
    }
    if (tokens[0] == "p") {
      if (status != 1) throw ParseError(line, "path line outside a feasible solution");
      if (tokens.size() < 4) throw ParseError(line, "expected 'p <i> <len> <v1> ...'");
      const std::int64_t index = to_int(tokens[1], line);
      if (index != static_cast<std::int64_t>(sol.paths.size()) + 1) {
        throw ParseError(line, "paths must be listed in demand order");
      }
      Path p;
      p.length = to_int(tokens[2], line);
      for (std::size_t i = 3; i < tokens.size(); ++i) {
        p.vertices.push_back(static_cast<VertexId>(to_int(tokens[i], line)));
      }
      sol.paths.push_back(std::move(p));
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(tokens[0]) + "'");
  });
  if (status == -1) throw ParseError(1, "missing status line");
  if (status == 0) return std::nullopt;
  return sol;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace dspc
