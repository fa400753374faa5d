#pragma once

#include <json.hpp>

#include "rankmod/channel.hpp"
#include "rankmod/lee.hpp"
#include "rankmod/mpcodes.hpp"
#include "rankmod/systematic.hpp"
#include "rankmod/verify.hpp"

namespace rankmod {

using nlohmann::json;

// {"h":[...],"modulus":M,"radius":t}
json to_json(const CheckSequence &c);
CheckSequence check_sequence_from_json(const json &j);

json to_json(const CodeRecipe &recipe);
CodeRecipe recipe_from_json(const json &j);

json to_json(const MultiPermCode &code);
MultiPermCode multiperm_code_from_json(const json &j);

// {"k":4,"r":2,"t":1,"h":[1,2,3],"modulus":7,"rhos":[[0,5,0,0,6,0],...],
//  "info":"1+2+3+4","redundancy":"5+6","recipe":{...}}
json to_json(const SystematicCode &code);
SystematicCode systematic_code_from_json(const json &j);

json to_json(const SimReport &report);
json to_json(const PropertyResult &result);
json to_json(const Advice &advice);

} // namespace rankmod
