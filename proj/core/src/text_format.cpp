#include "mgd/text_format.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "mgd/canonical.hpp"

namespace mgd {

namespace {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
    } else {
      Token t{"", line, column};
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#') {
        t.text.push_back(text[i]);
        ++i;
        ++column;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  std::ostringstream out;
  out << "line " << t.line << ", column " << t.column << ": " << msg;
  throw ParseError(out.str(), t.line, t.column);
}

// Parses a (possibly negative) integer out of token text at position p.
int read_int(const Token& t, std::size_t& p, const char* what) {
  std::size_t q = p;
  if (q < t.text.size() && (t.text[q] == '-' || t.text[q] == '+')) ++q;
  std::size_t digits = q;
  while (q < t.text.size() && std::isdigit(static_cast<unsigned char>(t.text[q]))) ++q;
  if (q == digits) fail(t, std::string("expected ") + what + " in '" + t.text + "'");
  const int value = std::stoi(t.text.substr(p, q - p));
  p = q;
  return value;
}

void expect_char(const Token& t, std::size_t& p, char c) {
  if (p >= t.text.size() || t.text[p] != c) {
    fail(t, std::string("expected '") + c + "' in '" + t.text + "'");
  }
  ++p;
}

struct VertexTok {
  VertexKind kind = VertexKind::kCrossing;
  std::array<int, 4> labels{};
};

// "X+(a,b,c,d)" / "X-(a,b,c,d)" / "M(a,b,c,d)"; the X- form is normalized on
// the spot: X-(a,b,c,d) has its over-strand on the (a,c) diagonal, which is
// the same vertex as X+(b,c,d,a).
VertexTok parse_vertex(const Token& t, std::size_t p) {
  VertexTok v;
  bool rotate = false;
  if (t.text[0] == 'M') {
    v.kind = VertexKind::kMarked;
  } else {
    v.kind = VertexKind::kCrossing;
    rotate = t.text[1] == '-';
  }
  expect_char(t, p, '(');
  std::array<int, 4> raw{};
  for (int k = 0; k < 4; ++k) {
    if (k) expect_char(t, p, ',');
    raw[k] = read_int(t, p, "arc label");
  }
  expect_char(t, p, ')');
  if (p != t.text.size()) fail(t, "trailing characters in '" + t.text + "'");
  for (int k = 0; k < 4; ++k) v.labels[k] = raw[rotate ? (k + 1) & 3 : k];
  return v;
}

}  // namespace

Diagram parse(const std::string& text) {
  const std::vector<Token> tokens = tokenize(text);

  // Optional first-line header "orient:" followed by "label>" / "label<"
  // direction tokens on the same line.
  std::size_t first = 0;
  std::vector<std::pair<int, char>> directions;  // label, '>' or '<'
  std::map<int, Token> direction_at;
  if (!tokens.empty() && tokens[0].text == "orient:") {
    const int header_line = tokens[0].line;
    first = 1;
    while (first < tokens.size() && tokens[first].line == header_line) {
      const Token& t = tokens[first];
      std::size_t p = 0;
      const int label = read_int(t, p, "arc label");
      if (p + 1 != t.text.size() || (t.text[p] != '>' && t.text[p] != '<')) {
        fail(t, "expected direction token like '3>' or '3<'");
      }
      if (direction_at.count(label)) fail(t, "duplicate direction for arc " +
                                                 std::to_string(label));
      directions.emplace_back(label, t.text[p]);
      direction_at.emplace(label, t);
      ++first;
    }
    if (directions.empty()) fail(tokens[0], "empty orient header");
  }

  std::vector<VertexTok> vertices;
  std::vector<std::pair<int, int>> loops;  // label, face tag
  std::map<int, std::vector<Token>> label_tokens;  // arc label -> tokens using it
  std::map<int, Token> loop_label_at;
  // Occurrences of each arc label in reading order: (vertex, reading position).
  std::map<int, std::vector<DartId>> text_occurrence;

  for (std::size_t i = first; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.text.rfind("X+", 0) == 0 || t.text.rfind("X-", 0) == 0 ||
        t.text.rfind("M(", 0) == 0) {
      const std::size_t open = t.text[0] == 'M' ? 1 : 2;
      const VertexTok v = parse_vertex(t, open);
      const int vi = static_cast<int>(vertices.size());
      const bool rotated = t.text.rfind("X-", 0) == 0;
      for (int k = 0; k < 4; ++k) {
        // Reading order of the token's labels; slot positions already
        // normalized for the X- form.
        const int slot = rotated ? (k + 3) & 3 : k;
        text_occurrence[v.labels[slot]].push_back(Diagram::dart(vi, slot));
        label_tokens[v.labels[slot]].push_back(t);
      }
      vertices.push_back(v);
    } else if (t.text.rfind("O(", 0) == 0) {
      std::size_t p = 1;
      expect_char(t, p, '(');
      const int label = read_int(t, p, "loop label");
      expect_char(t, p, ')');
      int tag = 0;
      if (p < t.text.size() && t.text[p] == '@') {
        ++p;
        tag = read_int(t, p, "face tag");
      }
      if (p != t.text.size()) fail(t, "trailing characters in '" + t.text + "'");
      if (loop_label_at.count(label)) {
        fail(t, "loop label " + std::to_string(label) + " reused");
      }
      loops.emplace_back(label, tag);
      loop_label_at.emplace(label, t);
    } else {
      fail(t, "unrecognized token '" + t.text + "'");
    }
  }

  for (const auto& [label, occ] : text_occurrence) {
    if (occ.size() != 2) {
      fail(label_tokens[label].back(), "arc label " + std::to_string(label) +
                                           " occurs " + std::to_string(occ.size()) +
                                           " times; expected exactly 2");
    }
    if (loop_label_at.count(label)) {
      fail(loop_label_at.at(label),
           "loop label " + std::to_string(label) + " collides with an arc label");
    }
  }

  Diagram::Builder b;
  for (const VertexTok& v : vertices) b.add_vertex(v.kind, v.labels);
  for (const auto& [label, tag] : loops) {
    (void)label;
    b.add_loop(tag);
  }
  Diagram d = b.build();

  if (!directions.empty()) {
    std::vector<std::uint8_t> in(d.dart_count(), 0);
    std::set<int> directed;
    for (const auto& [label, arrow] : directions) {
      const auto it = text_occurrence.find(label);
      if (it == text_occurrence.end()) {
        fail(direction_at.at(label),
             "direction for unknown arc " + std::to_string(label));
      }
      // '>' points from the first occurrence in reading order to the second.
      const DartId head = arrow == '>' ? it->second[1] : it->second[0];
      in[head] = 1;
      directed.insert(label);
    }
    for (const auto& [label, occ] : text_occurrence) {
      (void)occ;
      if (!directed.count(label)) {
        fail(tokens[0], "orient header missing arc " + std::to_string(label));
      }
    }
    d.set_orientation(std::move(in));
  }
  return d;
}

std::string serialize(const Diagram& d) {
  const Diagram c = canonical_form(d);

  // Edge labels 1..E in first-appearance order over darts.
  std::vector<int> label_of(c.dart_count(), 0);
  std::vector<DartId> first_dart;  // label-1 -> first dart carrying it
  int next = 1;
  for (DartId x = 0; x < c.dart_count(); ++x) {
    if (label_of[x]) continue;
    label_of[x] = label_of[c.alpha(x)] = next++;
    first_dart.push_back(x);
  }

  std::ostringstream out;
  if (c.orientation()) {
    out << "orient:";
    for (std::size_t e = 0; e < first_dart.size(); ++e) {
      const DartId f = first_dart[e];
      out << ' ' << (e + 1) << ((*c.orientation())[c.alpha(f)] ? '>' : '<');
    }
    out << '\n';
  }

  bool sep = false;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (sep) out << ' ';
    sep = true;
    out << (c.kind(v) == VertexKind::kCrossing ? "X+(" : "M(");
    for (int s = 0; s < 4; ++s) {
      if (s) out << ',';
      out << label_of[Diagram::dart(v, s)];
    }
    out << ')';
  }
  const int edge_count = c.edge_count();
  for (std::size_t i = 0; i < c.loops().size(); ++i) {
    if (sep) out << ' ';
    sep = true;
    out << "O(" << (edge_count + 1 + static_cast<int>(i)) << ')';
    if (c.loops()[i].face_tag != 0) out << '@' << c.loops()[i].face_tag;
  }
  out << '\n';
  return out.str();
}

}  // namespace mgd
