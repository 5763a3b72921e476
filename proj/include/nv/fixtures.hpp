/*!
  \file fixtures.hpp
  \brief The pinned fixture corpus: the worked examples that the library
  keeps as files, with a byte-level manifest.
*/

#pragma once

#include "json_io.hpp"
#include "reduction.hpp"

#include <filesystem>
#include <fstream>
#include <map>

namespace nv
{

inline std::uint64_t fnv64( std::string const& data )
{
  std::uint64_t h = 1469598103934665603ull;
  for ( unsigned char c : data )
  {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail
{

inline code_set code2( std::vector<std::pair<char const*, char const*>> coords )
{
  signature sig{ 2, 2 };
  std::vector<ntuple> elems;
  for ( auto const& [a, b] : coords )
    elems.emplace_back( sig, std::vector<std::string>{ a, b } );
  return code_set( sig, std::move( elems ) );
}

inline table nonmax_table( std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rows )
{
  signature sig{ 2, 2 };
  table::pair_list ps;
  for ( auto& [d, i] : rows )
    ps.emplace_back( ntuple( sig, d ), ntuple( sig, i ) );
  return table( sig, std::move( ps ) );
}

} // namespace detail

/*! The table with two distinct maximal extensions: it swaps (1,10) and
    (1,11) and fixes (0,0), (0,1), (1,0). */
inline table nonmax_extension_table()
{
  return detail::nonmax_table( { { { "0", "0" }, { "0", "0" } },
                                 { { "0", "1" }, { "0", "1" } },
                                 { { "1", "0" }, { "1", "0" } },
                                 { { "1", "10" }, { "1", "11" } },
                                 { { "1", "11" }, { "1", "10" } } } );
}

inline table nonmax_extension_f1()
{
  return detail::nonmax_table( { { { "", "0" }, { "", "0" } },
                                 { { "0", "1" }, { "0", "1" } },
                                 { { "1", "10" }, { "1", "11" } },
                                 { { "1", "11" }, { "1", "10" } } } );
}

inline table nonmax_extension_f2()
{
  return detail::nonmax_table( { { { "0", "" }, { "0", "" } },
                                 { { "1", "0" }, { "1", "0" } },
                                 { { "1", "10" }, { "1", "11" } },
                                 { { "1", "11" }, { "1", "10" } } } );
}

/*! The 5-element maximal joinless code in 3 dimensions with no parse
    tree. */
inline code_set lawson_vdovina_code()
{
  signature sig{ 3, 2 };
  std::vector<ntuple> elems{
      ntuple( sig, { "0", "0", "" } ), ntuple( sig, { "1", "", "0" } ), ntuple( sig, { "", "1", "1" } ),
      ntuple( sig, { "0", "1", "0" } ), ntuple( sig, { "1", "0", "1" } ) };
  return code_set( sig, std::move( elems ) );
}

/*! Every fixture file, keyed by filename. */
inline std::map<std::string, std::string> fixture_files()
{
  auto dump = []( json const& j ) { return j.dump( 2 ) + "\n"; };
  std::map<std::string, std::string> files;

  files["fig1-rectangles.json"] =
      dump( code_to_json( detail::code2( { { "0", "00" }, { "010", "0" }, { "10", "1101" }, { "1", "1110" } } ) ) );
  files["max-code-2d.json"] = dump( code_to_json( detail::code2( { { "", "0" }, { "0", "1" }, { "1", "1" } } ) ) );
  files["ifc-not-joinless.json"] = dump( code_to_json( detail::code2( { { "", "0" }, { "0", "" } } ) ) );
  files["essential-not-joinless.json"] =
      dump( code_to_json( detail::code2( { { "", "0" }, { "0", "" }, { "1", "1" } } ) ) );
  files["uniform-2x2.json"] = dump( code_to_json( uniform_code( signature{ 2, 2 }, 1 ) ) );
  files["lawson-vdovina.json"] = dump( code_to_json( lawson_vdovina_code() ) );

  auto trees = enumerate_parse_trees( uniform_code( signature{ 2, 2 }, 1 ) );
  for ( std::size_t i = 0; i < trees.size(); ++i )
    files["uniform-2x2-tree-" + std::to_string( i + 1 ) + ".json"] = dump( parse_tree_to_json( trees[i] ) );

  files["nonmax-f.json"] = dump( table_to_json( nonmax_extension_table() ) );
  files["nonmax-f1.json"] = dump( table_to_json( nonmax_extension_f1() ) );
  files["nonmax-f2.json"] = dump( table_to_json( nonmax_extension_f2() ) );

  auto b = builtin_tables();
  files["phi-not.json"] = dump( table_to_json( b.phi_not ) );
  files["phi-or.json"] = dump( table_to_json( b.phi_or ) );
  files["phi-and.json"] = dump( table_to_json( b.phi_and ) );
  files["phi-0f.json"] = dump( table_to_json( b.phi_zero_fork ) );
  files["phi-f.json"] = dump( table_to_json( b.phi_fork ) );
  files["tau12.json"] = dump( table_to_json( b.tau12 ) );
  files["fredkin.json"] = dump( table_to_json( fredkin_table() ) );

  files["reg-v.json"] = dump( registry_to_json( standard_registry_v() ) );
  files["reg-2v.json"] = dump( registry_to_json( embed_registry( standard_registry_v() ) ) );

  files["tau-sigma-relator.txt"] = "sigma tau(1) sigma^-1 tau(2)^-1\n";

  json manifest;
  for ( auto const& [name, content] : files )
  {
    char hex[17];
    std::snprintf( hex, sizeof hex, "%016llx", static_cast<unsigned long long>( fnv64( content ) ) );
    manifest[name] = json::object( { { "bytes", content.size() }, { "fnv64", std::string( hex ) } } );
  }
  files["manifest.json"] = dump( manifest );
  return files;
}

/*! Writes the corpus into dir; idempotent (same bytes every run). */
inline std::vector<std::string> fixtures_install( std::filesystem::path const& dir )
{
  std::filesystem::create_directories( dir );
  std::vector<std::string> written;
  for ( auto const& [name, content] : fixture_files() )
  {
    std::ofstream out( dir / name, std::ios::binary );
    if ( !out )
      throw error( "IO", "cannot write " + ( dir / name ).string() );
    out << content;
    written.push_back( name );
  }
  return written;
}

} // namespace nv
