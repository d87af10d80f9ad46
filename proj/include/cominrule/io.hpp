#pragma once

#include <map>
#include <memory>
#include <string>

#include <json.hpp>

#include "cominrule/schubert.hpp"

namespace cominrule {

/// Column tuple as a JSON integer array, e.g. [4,2,1].
nlohmann::json shape_to_json(const Shape& s);
/// Accepts an integer array or a tuple string such as "(4,2,1)".
Shape shape_from_json(const nlohmann::json& j, const BoxPoset& poset);

/// Nonzero entries as [{"lam":[..],"mu":[..],"nu":[..],"c":n}, ...] in table order.
nlohmann::json table_to_json(const CoeffTable& table);
CoeffTable table_from_json(const nlohmann::json& j, std::shared_ptr<const Space> space);

/// Same entries as CSV with header lam,mu,nu,c and quoted tuples.
std::string table_to_csv(const CoeffTable& table);
CoeffTable table_from_csv(const std::string& text, std::shared_ptr<const Space> space);

/// {"space": ..., "inner": [..], "outer": [..], "labels": [[column,row,label], ...]}
nlohmann::json tableau_to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const nlohmann::json& j, const Space& space);

/// {"(2)": 1, "(1,1)": 1}
nlohmann::json expansion_to_json(const std::map<Shape, std::int64_t>& expansion);

/// Grid picture of a tableau: one line per row, top row first.
std::string render_tableau(const StandardTableau& t);

}  // namespace cominrule
