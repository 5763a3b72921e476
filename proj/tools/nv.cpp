/*!
  \file nv.cpp
  \brief Command-line front end: codes, tables, words, circuits, the
  circuit-to-word compiler, equivalence checking, and the fixture corpus.

  Exit codes: 0 success / "true", 1 well-formed "false" answer,
  2 input or usage error.  Diagnostics go to stderr; --json switches
  every query to a machine-readable object with a "verdict" field.
*/

#include <nv/fixtures.hpp>
#include <nv/json_io.hpp>
#include <nv/reduction.hpp>
#include <nv/svg.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{

int constexpr exit_true = 0;
int constexpr exit_false = 1;
int constexpr exit_error = 2;

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw nv::error( "IO", "cannot read " + path );
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( std::string const& path, std::string const& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw nv::error( "IO", "cannot write " + path );
  out << content;
}

nv::json load_json( std::string const& path )
{
  try
  {
    return nv::json::parse( read_file( path ) );
  }
  catch ( nv::json::exception const& e )
  {
    throw nv::error( "BadFile", path + ": " + e.what() );
  }
}

struct options
{
  bool json = false;
  bool color = false;
  unsigned jobs = 1;
};

void emit( options const& opt, bool verdict, nv::json data, std::string const& human )
{
  if ( opt.json )
  {
    data["verdict"] = verdict;
    std::cout << data.dump( 2 ) << "\n";
  }
  else if ( opt.color )
  {
    std::cout << ( verdict ? "\033[32m" : "\033[31m" ) << human << "\033[0m\n";
  }
  else
  {
    std::cout << human << "\n";
  }
}

nv::generator_registry load_registry( std::string const& path )
{
  if ( path.empty() )
    return nv::standard_registry_v();
  return nv::registry_from_json( load_json( path ) );
}

std::string render_parse_tree( nv::parse_tree const& t )
{
  std::ostringstream out;
  std::function<void( nv::ntuple const&, int )> rec = [&]( nv::ntuple const& v, int depth ) {
    out << std::string( static_cast<std::size_t>( depth ) * 2, ' ' ) << nv::to_string( v );
    auto it = t.split_axis.find( v );
    if ( it != t.split_axis.end() )
    {
      out << "  [axis " << it->second << "]\n";
      for ( auto const& c : t.edges.at( v ) )
        rec( c, depth + 1 );
    }
    else
    {
      out << "\n";
    }
  };
  rec( nv::ntuple::root( t.sig ), 0 );
  return out.str();
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "string calculus for the Brin-Thompson groups nV: joinless codes, tables, words, and the circuit reduction" };
  app.require_subcommand( 1 );

  options opt;
  app.add_flag( "--json", opt.json, "machine-readable output" );
  if ( char const* env = std::getenv( "NV_JOBS" ) )
    opt.jobs = static_cast<unsigned>( std::max( 1, std::atoi( env ) ) );
  if ( char const* env = std::getenv( "NV_COLOR" ) )
    opt.color = std::string( env ) != "0" && std::string( env ) != "";
  app.add_option( "--jobs", opt.jobs, "worker threads for long verifications" );

  int rc = exit_true;

  // ---- code ------------------------------------------------------------
  auto* code = app.add_subcommand( "code", "joinless codes" );
  code->require_subcommand( 1 );
  static std::string code_file, out_file, at_tuple;
  static int axis = 1;
  static bool exhaustive = false;

  auto* code_validate = code->add_subcommand( "validate", "check a code file and report its certifications" );
  code_validate->add_option( "file", code_file )->required();
  code_validate->callback( [&] {
    auto P = nv::code_from_json( load_json( code_file ) );
    bool const ifc = P.is_initial_factor_code();
    bool const joinless = P.is_joinless();
    bool const maximal = joinless && P.kraft_sum().is_one();
    nv::json data{ { "elements", P.size() },
                   { "initialFactorCode", ifc },
                   { "joinless", joinless },
                   { "maximalJoinless", maximal },
                   { "kraftSum", P.kraft_sum().to_string() } };
    std::ostringstream human;
    human << P.size() << " tuples; initial factor code: " << ( ifc ? "yes" : "no" )
          << "; joinless: " << ( joinless ? "yes" : "no" )
          << "; maximal: " << ( maximal ? "yes" : "no" ) << "; kraft sum " << P.kraft_sum().to_string();
    emit( opt, true, data, human.str() );
  } );

  auto* code_maximal = code->add_subcommand( "maximal", "decide maximality by the Kraft equality" );
  code_maximal->add_option( "file", code_file )->required();
  code_maximal->callback( [&] {
    auto P = nv::code_from_json( load_json( code_file ) );
    bool const maximal = P.is_maximal_joinless();
    emit( opt, maximal, { { "kraftSum", P.kraft_sum().to_string() } },
          maximal ? "maximal joinless code (kraft sum 1)"
                  : "not maximal (kraft sum " + P.kraft_sum().to_string() + ")" );
    rc = maximal ? exit_true : exit_false;
  } );

  auto* code_tree = code->add_subcommand( "parse-tree", "construct a parse tree" );
  code_tree->add_option( "file", code_file )->required();
  code_tree->add_flag( "--exhaustive", exhaustive, "complete backtracking search" );
  code_tree->add_option( "-o,--output", out_file, "write the tree as JSON" );
  code_tree->callback( [&] {
    auto P = nv::code_from_json( load_json( code_file ) );
    auto t = nv::make_parse_tree( P, exhaustive ? nv::parse_mode::exhaustive : nv::parse_mode::greedy_deterministic );
    if ( !t )
    {
      emit( opt, false, { { "mode", exhaustive ? "exhaustive" : "greedy" } },
            exhaustive ? "no parse tree exists" : "greedy search found no parse tree" );
      rc = exit_false;
      return;
    }
    if ( !out_file.empty() )
      write_file( out_file, nv::parse_tree_to_json( *t ).dump( 2 ) + "\n" );
    emit( opt, true, nv::parse_tree_to_json( *t ), render_parse_tree( *t ) );
  } );

  auto* code_restrict = code->add_subcommand( "restrict", "one-step restriction at a tuple" );
  code_restrict->add_option( "file", code_file )->required();
  code_restrict->add_option( "--at", at_tuple, "tuple to split, e.g. \"(0,-)\"" )->required();
  code_restrict->add_option( "--axis", axis, "coordinate to split (1-based)" )->required();
  code_restrict->add_option( "-o,--output", out_file, "write the restricted code" );
  code_restrict->callback( [&] {
    auto P = nv::code_from_json( load_json( code_file ) );
    auto R = nv::one_step_restriction( P, nv::parse_ntuple( P.sig(), at_tuple ), axis );
    auto j = nv::code_to_json( R );
    if ( !out_file.empty() )
      write_file( out_file, j.dump( 2 ) + "\n" );
    std::ostringstream human;
    for ( auto const& e : R )
      human << nv::to_string( e ) << " ";
    emit( opt, true, j, human.str() );
  } );

  auto* code_svg = code->add_subcommand( "tiling-svg", "render the rectangle tiling of an n=2 code" );
  code_svg->add_option( "file", code_file )->required();
  code_svg->add_option( "-o,--output", out_file )->required();
  code_svg->callback( [&] {
    auto P = nv::code_from_json( load_json( code_file ) );
    write_file( out_file, nv::tiling_svg( P ) );
    emit( opt, true, { { "file", out_file } }, "wrote " + out_file );
  } );

  // ---- table -----------------------------------------------------------
  auto* tab = app.add_subcommand( "table", "group elements as tables" );
  tab->require_subcommand( 1 );
  static std::string table_file, table_file2, x_arg;

  auto* tab_validate = tab->add_subcommand( "validate", "check the table invariants" );
  tab_validate->add_option( "file", table_file )->required();
  tab_validate->callback( [&] {
    auto t = nv::table_from_json( load_json( table_file ) );
    auto d = t.validate();
    emit( opt, d.ok, { { "violation", d.first_violation } },
          d.ok ? "valid table" : "invalid: " + d.first_violation );
    rc = d.ok ? exit_true : exit_false;
  } );

  auto* tab_apply = tab->add_subcommand( "apply", "apply the table to a tuple" );
  tab_apply->add_option( "file", table_file )->required();
  tab_apply->add_option( "--x", x_arg, "input tuple" )->required();
  tab_apply->callback( [&] {
    auto t = nv::table_from_json( load_json( table_file ) );
    auto y = t.apply( nv::parse_ntuple( t.sig(), x_arg ) );
    if ( !y )
    {
      emit( opt, false, { { "defined", false } }, "undefined (no initial factor in the domain code)" );
      rc = exit_false;
      return;
    }
    emit( opt, true, { { "image", nv::ntuple_to_json( *y ) } }, nv::to_string( *y ) );
  } );

  auto* tab_invert = tab->add_subcommand( "invert", "swap domain and image" );
  tab_invert->add_option( "file", table_file )->required();
  tab_invert->add_option( "-o,--output", out_file );
  tab_invert->callback( [&] {
    auto t = nv::inverse( nv::table_from_json( load_json( table_file ) ) );
    auto j = nv::table_to_json( t );
    if ( !out_file.empty() )
      write_file( out_file, j.dump( 2 ) + "\n" );
    emit( opt, true, j, j.dump( 2 ) );
  } );

  auto* tab_compose = tab->add_subcommand( "compose", "compose two tables (second applied first)" );
  tab_compose->add_option( "f2", table_file )->required();
  tab_compose->add_option( "f1", table_file2 )->required();
  tab_compose->add_option( "-o,--output", out_file );
  tab_compose->callback( [&] {
    auto f2 = nv::table_from_json( load_json( table_file ) );
    auto f1 = nv::table_from_json( load_json( table_file2 ) );
    auto t = nv::compose( f2, f1 );
    auto j = nv::table_to_json( t );
    if ( !out_file.empty() )
      write_file( out_file, j.dump( 2 ) + "\n" );
    emit( opt, true, j, j.dump( 2 ) );
  } );

  auto* tab_equiv = tab->add_subcommand( "equiv", "decide end-equivalence of two tables" );
  tab_equiv->add_option( "f1", table_file )->required();
  tab_equiv->add_option( "f2", table_file2 )->required();
  tab_equiv->callback( [&] {
    auto f1 = nv::table_from_json( load_json( table_file ) );
    auto f2 = nv::table_from_json( load_json( table_file2 ) );
    bool const same = nv::end_equivalent( f1, f2 );
    emit( opt, same, {}, same ? "end-equivalent (same group element)" : "different group elements" );
    rc = same ? exit_true : exit_false;
  } );

  auto* tab_ext = tab->add_subcommand( "extensions", "all maximal extensions reachable by one-step table extensions" );
  tab_ext->add_option( "file", table_file )->required();
  tab_ext->callback( [&] {
    auto t = nv::table_from_json( load_json( table_file ) );
    auto exts = nv::maximal_extensions( t );
    nv::json arr = nv::json::array();
    for ( auto const& e : exts )
      arr.push_back( nv::table_to_json( e ) );
    emit( opt, true, { { "count", exts.size() }, { "extensions", arr } },
          std::to_string( exts.size() ) + " maximal extension(s)\n" + arr.dump( 2 ) );
  } );

  // ---- word ------------------------------------------------------------
  auto* wrd = app.add_subcommand( "word", "words over a generator registry" );
  wrd->require_subcommand( 1 );
  static std::string word_file, registry_file, mode_arg = "table", bits_arg, out_registry;

  auto* wrd_eval = wrd->add_subcommand( "eval", "evaluate a word to a table, or stream it on a tuple" );
  wrd_eval->add_option( "file", word_file )->required();
  wrd_eval->add_option( "--registry", registry_file, "registry JSON (default: the builtin V registry)" );
  wrd_eval->add_option( "--x", x_arg, "stream on this tuple instead" );
  wrd_eval->callback( [&] {
    auto reg = load_registry( registry_file );
    auto w = nv::parse_word( read_file( word_file ) );
    if ( !x_arg.empty() )
    {
      auto y = nv::streaming_eval( w, reg, nv::parse_ntuple( reg.sig(), x_arg ) );
      if ( !y )
      {
        emit( opt, false, { { "defined", false } }, "undefined (input too shallow)" );
        rc = exit_false;
        return;
      }
      emit( opt, true, { { "image", nv::ntuple_to_json( *y ) } }, nv::to_string( *y ) );
      return;
    }
    auto t = nv::eval_to_table( w, reg );
    emit( opt, true, nv::table_to_json( t ), nv::table_to_json( t ).dump( 2 ) );
  } );

  auto* wrd_id = wrd->add_subcommand( "identity", "decide whether the word is the identity" );
  wrd_id->add_option( "file", word_file )->required();
  wrd_id->add_option( "--registry", registry_file );
  wrd_id->add_option( "--mode", mode_arg, "table | exhaustive" )->check( CLI::IsMember( { "table", "exhaustive" } ) );
  wrd_id->callback( [&] {
    auto reg = load_registry( registry_file );
    auto w = nv::parse_word( read_file( word_file ) );
    auto res = nv::is_identity_word( w, reg,
                                     mode_arg == "table" ? nv::identity_mode::table : nv::identity_mode::exhaustive,
                                     opt.jobs );
    nv::json data{ { "cGamma", reg.c_gamma() }, { "size", nv::word_size( w, reg ) } };
    if ( res.witness )
      data["witness"] = nv::ntuple_to_json( *res.witness );
    emit( opt, res.is_identity, data,
          res.is_identity ? "identity"
                          : "not the identity (moves " + nv::to_string( *res.witness ) + ")" );
    rc = res.is_identity ? exit_true : exit_false;
  } );

  auto* wrd_enc = wrd->add_subcommand( "encode", "prefix-free binary encoding of a word" );
  wrd_enc->add_option( "file", word_file )->required();
  wrd_enc->add_option( "--registry", registry_file );
  wrd_enc->callback( [&] {
    auto reg = load_registry( registry_file );
    auto w = nv::parse_word( read_file( word_file ) );
    auto bits = nv::encode_word( w, reg );
    emit( opt, true, { { "bits", bits }, { "size", nv::word_size( w, reg ) } }, bits );
  } );

  auto* wrd_dec = wrd->add_subcommand( "decode", "decode a bitstring back into a word" );
  wrd_dec->add_option( "bits", bits_arg, "bitstring, or a file containing one" )->required();
  wrd_dec->add_option( "--registry", registry_file );
  wrd_dec->callback( [&] {
    auto reg = load_registry( registry_file );
    std::string bits = bits_arg;
    if ( std::ifstream probe( bits_arg ); probe )
    {
      bits = read_file( bits_arg );
      while ( !bits.empty() && ( bits.back() == '\n' || bits.back() == '\r' ) )
        bits.pop_back();
    }
    auto w = nv::decode_word( bits, reg );
    emit( opt, true, { { "word", nv::to_string( w ) } }, nv::to_string( w ) );
  } );

  auto* wrd_embed = wrd->add_subcommand( "embed", "rewrite a V word over Gamma_V + tau into a 2V word" );
  wrd_embed->add_option( "file", word_file )->required();
  wrd_embed->add_option( "--registry", registry_file );
  wrd_embed->add_option( "-o,--output", out_file, "write the 2V word" );
  wrd_embed->add_option( "--emit-registry", out_registry, "write the finite 2V registry" );
  wrd_embed->callback( [&] {
    auto reg = load_registry( registry_file );
    auto w = nv::parse_word( read_file( word_file ) );
    auto e = nv::embed_v_into_2v( w, reg );
    if ( !out_file.empty() )
      write_file( out_file, nv::to_string( e ) + "\n" );
    if ( !out_registry.empty() )
      write_file( out_registry, nv::registry_to_json( nv::embed_registry( reg ) ).dump( 2 ) + "\n" );
    emit( opt, true, { { "word", nv::to_string( e ) }, { "length", e.size() } }, nv::to_string( e ) );
  } );

  // ---- circuit ----------------------------------------------------------
  auto* cir = app.add_subcommand( "circuit", "boolean circuits" );
  cir->require_subcommand( 1 );
  static std::string circuit_file;

  auto* cir_eval = cir->add_subcommand( "eval", "evaluate on an input bitstring" );
  cir_eval->add_option( "file", circuit_file )->required();
  cir_eval->add_option( "--x", bits_arg, "input bits" )->required();
  cir_eval->callback( [&] {
    auto c = nv::circuit_from_json( load_json( circuit_file ) );
    std::vector<bool> x;
    for ( char ch : bits_arg )
      x.push_back( ch == '1' );
    auto y = c.evaluate( x );
    std::string out;
    for ( bool b : y )
      out.push_back( b ? '1' : '0' );
    emit( opt, true, { { "output", out } }, out );
  } );

  auto* cir_size = cir->add_subcommand( "size", "circuit size (edge count)" );
  cir_size->add_option( "file", circuit_file )->required();
  cir_size->callback( [&] {
    auto j = load_json( circuit_file );
    // raw edge count of the file, before fan-in/fan-out normalization
    int raw = static_cast<int>( j.at( "outputs" ).size() );
    for ( auto const& g : j.at( "gates" ) )
      raw += static_cast<int>( g.at( "inputs" ).size() );
    auto c = nv::circuit_from_json( j );
    auto s = nv::strictify( c );
    emit( opt, true,
          { { "rawSize", raw }, { "size", c.size() }, { "strictSize", s.size() }, { "depth", s.depth() } },
          "raw size " + std::to_string( raw ) + ", normalized " + std::to_string( c.size() ) +
              " (strictified " + std::to_string( s.size() ) + "), depth " + std::to_string( s.depth() ) );
  } );

  auto* cir_strict = cir->add_subcommand( "strictify", "insert identity gates for strict layering" );
  cir_strict->add_option( "file", circuit_file )->required();
  cir_strict->add_option( "-o,--output", out_file );
  cir_strict->callback( [&] {
    auto c = nv::strictify( nv::circuit_from_json( load_json( circuit_file ) ) );
    auto j = nv::circuit_to_json( c );
    if ( !out_file.empty() )
      write_file( out_file, j.dump( 2 ) + "\n" );
    emit( opt, true, j, j.dump( 2 ) );
  } );

  auto* cir_slices = cir->add_subcommand( "slices", "per-level decomposition of a strict circuit" );
  cir_slices->add_option( "file", circuit_file )->required();
  cir_slices->callback( [&] {
    auto c = nv::strictify( nv::circuit_from_json( load_json( circuit_file ) ) );
    auto sc = nv::slices( c );
    nv::json arr = nv::json::array();
    std::ostringstream human;
    for ( std::size_t l = 0; l < sc.levels.size(); ++l )
    {
      auto const& s = sc.levels[l];
      nv::json js{ { "level", l + 1 }, { "widthIn", s.width_in }, { "widthOut", s.width_out },
                   { "perm", s.perm }, { "size", s.size } };
      js["gates"] = nv::json::array();
      human << "level " << l + 1 << ":";
      for ( auto t : s.gates )
      {
        js["gates"].push_back( nv::to_string( t ) );
        human << " " << nv::to_string( t );
      }
      human << "  (in " << s.width_in << ", out " << s.width_out << ")\n";
      arr.push_back( js );
    }
    emit( opt, true, { { "slices", arr }, { "outputPerm", sc.output_perm } }, human.str() );
  } );

  // ---- compile ----------------------------------------------------------
  static std::string trace_file;
  static bool do_verify = false;
  auto* comp = app.add_subcommand( "compile", "compile a circuit into a simulating word over Gamma_V + tau" );
  comp->add_option( "file", circuit_file )->required();
  comp->add_option( "-o,--output", out_file, "write the word" );
  comp->add_option( "--trace", trace_file, "write the compilation trace" );
  comp->add_option( "--registry", registry_file );
  comp->add_flag( "--verify", do_verify, "check the simulation equation on all inputs" );
  comp->callback( [&] {
    auto c = nv::circuit_from_json( load_json( circuit_file ) );
    auto tr = nv::compile_circuit( c );
    if ( !out_file.empty() )
      write_file( out_file, nv::to_string( tr.final ) + "\n" );
    nv::json data{ { "wordSize", tr.sizes.word_size },
                   { "wordLength", tr.final.size() },
                   { "circuitSize", tr.sizes.circuit_size },
                   { "strictCircuitSize", tr.sizes.strict_circuit_size } };
    if ( !trace_file.empty() )
    {
      nv::json jt = data;
      jt["pi1"] = nv::to_string( tr.pi1 );
      jt["pi2"] = nv::to_string( tr.pi2 );
      jt["final"] = nv::to_string( tr.final );
      jt["sliceWords"] = nv::json::array();
      for ( std::size_t l = 0; l < tr.slice_words.size(); ++l )
        jt["sliceWords"].push_back( nv::json{ { "level", l + 1 },
                                              { "word", nv::to_string( tr.slice_words[l] ) },
                                              { "size", tr.sizes.slice_word_sizes[l] },
                                              { "sliceSize", tr.sizes.slice_sizes[l] } } );
      write_file( trace_file, jt.dump( 2 ) + "\n" );
    }
    bool ok = true;
    if ( do_verify )
    {
      auto reg = load_registry( registry_file );
      auto res = nv::verify_simulation( c, tr.final, reg, 20, opt.jobs );
      ok = res.ok;
      data["verified"] = res.ok;
      if ( !res.ok )
        std::cerr << "simulation check failed: " << res.detail << "\n";
    }
    emit( opt, ok, data,
          "word size " + std::to_string( tr.sizes.word_size ) + " for circuit size " +
              std::to_string( tr.sizes.circuit_size ) + ( do_verify ? ( ok ? "; verified" : "; VERIFICATION FAILED" ) : "" ) );
    rc = ok ? exit_true : exit_false;
  } );

  // ---- equiv ------------------------------------------------------------
  static std::string c1_file, c2_file, instances_dir, equiv_mode = "group";
  auto* eqv = app.add_subcommand( "equiv", "decide equivalence of two circuits" );
  eqv->add_option( "c1", c1_file )->required();
  eqv->add_option( "c2", c2_file )->required();
  eqv->add_option( "--mode", equiv_mode )->check( CLI::IsMember( { "group", "truthtable", "jordan" } ) );
  eqv->add_option( "--registry", registry_file );
  eqv->add_option( "--emit-instances", instances_dir, "write the word-problem instances into this directory" );
  eqv->callback( [&] {
    auto c1 = nv::circuit_from_json( load_json( c1_file ) );
    auto c2 = nv::circuit_from_json( load_json( c2_file ) );
    auto mode = equiv_mode == "group"        ? nv::equivalence_mode::group
                : equiv_mode == "truthtable" ? nv::equivalence_mode::truthtable
                                             : nv::equivalence_mode::jordan;
    nv::generator_registry reg = load_registry( registry_file );
    auto res = nv::circuit_equivalence( c1, c2, mode, &reg );
    nv::json data{ { "mode", equiv_mode } };
    if ( res.reduction )
    {
      data["arity"] = res.reduction->arity;
      if ( res.reduction->failing )
        data["failingInstance"] = *res.reduction->failing;
      if ( !instances_dir.empty() )
      {
        std::filesystem::create_directories( instances_dir );
        auto ext = nv::commutation_registry( reg );
        write_file( ( std::filesystem::path( instances_dir ) / "registry.json" ).string(),
                    nv::registry_to_json( ext ).dump( 2 ) + "\n" );
        for ( std::size_t i = 0; i < res.reduction->instances.size(); ++i )
          write_file( ( std::filesystem::path( instances_dir ) / ( "instance-" + std::to_string( i ) + ".txt" ) ).string(),
                      nv::to_string( res.reduction->instances[i] ) + "\n" );
      }
    }
    emit( opt, res.equivalent, data, res.equivalent ? "equivalent" : "not equivalent" );
    rc = res.equivalent ? exit_true : exit_false;
  } );

  // ---- fixtures ----------------------------------------------------------
  static std::string fixtures_dir;
  auto* fix = app.add_subcommand( "fixtures", "install the pinned fixture corpus" );
  fix->add_option( "dir", fixtures_dir )->required();
  fix->callback( [&] {
    auto written = nv::fixtures_install( fixtures_dir );
    emit( opt, true, { { "files", written } }, "wrote " + std::to_string( written.size() ) + " files to " + fixtures_dir );
  } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::ParseError const& e )
  {
    int const code = app.exit( e );
    return code == 0 ? 0 : exit_error;
  }
  catch ( nv::error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return rc;
}
