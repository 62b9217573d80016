#pragma once

#include <string>

#include "pipeforge/script/ast.hpp"
#include "pipeforge/script/code_graph.hpp"
#include "pipeforge/script/lexer.hpp"
#include "pipeforge/script/parser.hpp"
#include "pipeforge/script/resolver.hpp"

namespace pipeforge::script {

struct ScriptAnalysis {
  StatementList statements;
  AliasEnvironment environment;
  CodeGraph graph;
};

// Source text to code graph. Throws LexError for scripts that cannot be
// tokenized; everything else outside the subset is skipped and counted.
inline ScriptAnalysis analyze_script(const ScriptSource& source, const std::string& script_id) {
  ScriptAnalysis a;
  a.statements = parse_script(source);
  a.environment = resolve_names(a.statements);
  a.graph = build_code_graph(a.statements, a.environment, script_id);
  return a;
}

}  // namespace pipeforge::script
