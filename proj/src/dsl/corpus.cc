#include "afdt/corpus.h"

#include <stdexcept>
#include <string>

#include "afdt/dsl.h"
#include "corpus_data.h"

namespace afdt::corpus {

const std::vector<std::string_view>& names() {
  static const std::vector<std::string_view> kNames{"fig3_aft", "fig4_afdt", "gsaas"};
  return kNames;
}

std::string_view text(std::string_view name) {
  if (name == "fig3_aft") return data::kFig3;
  if (name == "fig4_afdt") return data::kFig4;
  if (name == "gsaas") return data::kGsaas;
  throw std::out_of_range("no bundled model '" + std::string(name) + "'");
}

Model load(std::string_view name) {
  auto result = dsl::parse(text(name));
  if (!result.ok())
    throw std::logic_error("bundled model '" + std::string(name) + "' does not parse: " +
                           dsl::to_string(result.errors.front()));
  return std::move(*result.model);
}

}  // namespace afdt::corpus
