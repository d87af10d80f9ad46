#include "cominrule/io.hpp"

#include <bit>
#include <sstream>

namespace cominrule {

using nlohmann::json;

json shape_to_json(const Shape& s) { return s.poset().column_counts(s.mask()); }

Shape shape_from_json(const json& j, const BoxPoset& poset) {
  if (j.is_string()) return parse_shape(j.get<std::string>(), poset);
  if (!j.is_array()) throw Error("shape must be an integer array or a tuple string");
  std::string text;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("shape must be an integer array or a tuple string");
    if (!text.empty()) text += ',';
    text += std::to_string(x.get<int>());
  }
  return parse_shape(text, poset);
}

json table_to_json(const CoeffTable& table) {
  const auto& shapes = table.space().shapes();
  json out = json::array();
  for (int l = 0; l < table.n(); ++l)
    for (int m = 0; m < table.n(); ++m)
      for (int v = 0; v < table.n(); ++v) {
        auto c = table.at(l, m, v);
        if (!c) continue;
        out.push_back({{"lam", shape_to_json(shapes[l])},
                       {"mu", shape_to_json(shapes[m])},
                       {"nu", shape_to_json(shapes[v])},
                       {"c", c}});
      }
  return out;
}

CoeffTable table_from_json(const json& j, std::shared_ptr<const Space> space) {
  if (!j.is_array()) throw Error("coefficient table must be a JSON array");
  CoeffTable table(space);
  const BoxPoset& p = space->poset();
  for (const auto& e : j) {
    int l = space->index(shape_from_json(e.at("lam"), p));
    int m = space->index(shape_from_json(e.at("mu"), p));
    int v = space->index(shape_from_json(e.at("nu"), p));
    table.at(l, m, v) = e.at("c").get<std::int64_t>();
  }
  return table;
}

std::string table_to_csv(const CoeffTable& table) {
  const auto& shapes = table.space().shapes();
  std::ostringstream out;
  out << "lam,mu,nu,c\n";
  for (int l = 0; l < table.n(); ++l)
    for (int m = 0; m < table.n(); ++m)
      for (int v = 0; v < table.n(); ++v) {
        auto c = table.at(l, m, v);
        if (!c) continue;
        out << '"' << print_shape(shapes[l]) << "\",\"" << print_shape(shapes[m]) << "\",\"" << print_shape(shapes[v])
            << "\"," << c << '\n';
      }
  return out.str();
}

CoeffTable table_from_csv(const std::string& text, std::shared_ptr<const Space> space) {
  CoeffTable table(space);
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "lam,mu,nu,c") throw Error("CSV table must start with lam,mu,nu,c");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        fields.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    fields.push_back(cur);
    if (fields.size() != 4) throw Error("CSV row needs four fields: " + line);
    int l = space->index(space->parse(fields[0]));
    int m = space->index(space->parse(fields[1]));
    int v = space->index(space->parse(fields[2]));
    table.at(l, m, v) = std::stoll(fields[3]);
  }
  return table;
}

json tableau_to_json(const StandardTableau& t) {
  const BoxPoset& p = *t.poset;
  json labels = json::array();
  for (Mask m = t.cells(); m; m &= m - 1) {
    int b = std::countr_zero(m);
    labels.push_back({p.grid(b).col, p.grid(b).row, t.label[b]});
  }
  return {{"space", p.spec().str()},
          {"inner", shape_to_json(Shape(p, t.inner))},
          {"outer", shape_to_json(Shape(p, t.outer))},
          {"labels", labels}};
}

StandardTableau tableau_from_json(const json& j, const Space& space) {
  const BoxPoset& p = space.poset();
  if (j.contains("space") && SpaceSpec::parse(j.at("space").get<std::string>()) != space.spec()) {
    throw Error("tableau file is for space " + j.at("space").get<std::string>() + ", not " + space.spec().str());
  }
  Shape inner = j.contains("inner") ? shape_from_json(j.at("inner"), p) : Shape::empty(p);
  Shape outer = shape_from_json(j.at("outer"), p);
  SkewShape skew(inner, outer);
  std::array<std::uint8_t, kMaxBoxes> label{};
  for (const auto& e : j.at("labels")) {
    if (!e.is_array() || e.size() != 3) throw Error("each label entry is [column,row,label]");
    GridPoint q{e[0].get<int>(), e[1].get<int>()};
    auto b = p.box_at(q);
    if (!b) throw Error("no box at column " + std::to_string(q.col) + ", row " + std::to_string(q.row));
    if (!((skew.cells() >> *b) & 1)) {
      throw Error("box at column " + std::to_string(q.col) + ", row " + std::to_string(q.row) +
                  " is not in the skew shape");
    }
    int v = e[2].get<int>();
    if (v < 1 || v > 255) throw Error("label out of range");
    label[*b] = static_cast<std::uint8_t>(v);
  }
  return make_tableau(skew, label);
}

json expansion_to_json(const std::map<Shape, std::int64_t>& expansion) {
  json out = json::object();
  for (const auto& [s, c] : expansion) out[print_shape(s)] = c;
  return out;
}

std::string render_tableau(const StandardTableau& t) {
  const BoxPoset& p = *t.poset;
  std::ostringstream out;
  for (int row = p.num_rows(); row >= 1; --row) {
    std::string line;
    for (int col = 1; col <= p.num_columns(); ++col) {
      auto b = p.box_at({col, row});
      std::string cell;
      if (!b) {
        cell = " ";
      } else if ((t.inner >> *b) & 1) {
        cell = "*";
      } else if ((t.cells() >> *b) & 1) {
        cell = std::to_string(t.label[*b]);
      } else {
        cell = ".";
      }
      while (cell.size() < 3) cell.insert(cell.begin(), ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace cominrule
