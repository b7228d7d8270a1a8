window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#a-three-line-taste","introduction.html#building-and-testing","introduction.html#crate-layout","exact-arithmetic.html#scalars-polynomials-and-exact-linear-algebra","exact-arithmetic.html#scalars","exact-arithmetic.html#polynomials","exact-arithmetic.html#exact-nullspaces","lattices.html#lattices-and-the-operators-d-and-s","lattices.html#structural-constants","lattices.html#the-x-derivative-and-the-x-average","pearson.html#from-pearson-data-to-recurrence-coefficients","pearson.html#regularity","pearson.html#recurrence-coefficients","pearson.html#evaluation-at-awkward-indices","detection.html#detecting-classical-families","detection.html#tables-and-generation","detection.html#moments","detection.html#the-quadratic-lattice-inversion","detection.html#the-weak-form-solve","detection.html#the-verdict","para-krawtchouk.html#the-para-krawtchouk-family","para-krawtchouk.html#weights","para-krawtchouk.html#classical-after-all","cli.html#the-command-line-interface","cli.html#rationals-and-strictness","cli.html#document-reference","cli.html#recurrence","cli.html#classify","cli.html#para-krawtchouk","cli.html#sweep"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":2.23606797749979},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":2.0},"23":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":2.8284271247461903},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"df":17,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"4":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"=":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}},"5":{"docs":{"19":{"tf":1.0}},"df":1},"8":{"docs":{"20":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}},"/":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"1":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":2.23606797749979},"14":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":3.0},"23":{"tf":3.4641016151377544},"26":{"tf":1.0},"27":{"tf":2.0},"28":{"tf":1.7320508075688772},"29":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":2.0}},"df":22,")":{"docs":{},"df":0,"!":{"docs":{},"df":0,"!":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"(":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}},"2":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"^":{"docs":{"21":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"23":{"tf":1.0}},"df":1}},"2":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":2.23606797749979},"26":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"29":{"tf":1.0},"30":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":15,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"_":{"docs":{},"df":0,"j":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}},"3":{"docs":{"30":{"tf":1.0}},"df":1},"4":{"docs":{"12":{"tf":1.0},"28":{"tf":1.0}},"df":2},"r":{"docs":{"9":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"2":{"docs":{"20":{"tf":1.0},"28":{"tf":1.0}},"df":2,"8":{"docs":{"22":{"tf":1.0}},"df":1}},"6":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}},"df":4},"}":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}},"2":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":2.23606797749979},"21":{"tf":1.7320508075688772},"22":{"tf":1.7320508075688772},"24":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":2.23606797749979}},"df":20,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4}}}}}}}}},"0":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}},"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"28":{"tf":1.4142135623730951}},"df":1}}}},"2":{"docs":{},"df":0,"/":{"docs":{},"df":0,"7":{"docs":{"5":{"tf":1.0}},"df":1}}},"a":{"docs":{"12":{"tf":1.0}},"df":1},"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}},"k":{"docs":{"17":{"tf":1.0}},"df":1},"n":{"docs":{"21":{"tf":1.0}},"df":1},"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.7320508075688772},"28":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0}},"df":8}},"3":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"27":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"s":{"docs":{"1":{"tf":1.0},"23":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":3},"z":{"docs":{"6":{"tf":1.0}},"df":1}},"4":{"docs":{"14":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":2.23606797749979},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"26":{"tf":1.0},"28":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":10,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.0}},"df":1}}}},"5":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":6,"/":{"docs":{},"df":0,"2":{"docs":{"28":{"tf":1.4142135623730951}},"df":1}},"0":{"docs":{"18":{"tf":1.0}},"df":1}},"6":{"docs":{"18":{"tf":1.0}},"df":1},"7":{"docs":{"20":{"tf":1.0}},"df":1},"8":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}},"9":{"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":3,"/":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"28":{"tf":1.0}},"df":1}},"4":{"docs":{"14":{"tf":1.0},"28":{"tf":2.6457513110645907}},"df":2},"8":{"docs":{"28":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0}},"df":1}},"t":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.4142135623730951}},"df":5}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18}}}}}}}},"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":2.0},"9":{"tf":2.0}},"df":2,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":2}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"5":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0}},"df":1}}}},"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"w":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"b":{"docs":{"13":{"tf":1.0}},"df":1,"0":{"docs":{"21":{"tf":1.0}},"df":1}},"c":{"docs":{"13":{"tf":1.0}},"df":1,"1":{"docs":{"21":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}},"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1},"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"z":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"[":{"docs":{},"df":0,"4":{"docs":{"17":{"tf":1.0}},"df":1},"8":{"docs":{"17":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},"p":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}},"d":{"docs":{},"df":0,".":{"docs":{"23":{"tf":1.0}},"df":1,"a":{"docs":{"23":{"tf":1.0}},"df":1},"b":{"docs":{"23":{"tf":1.0}},"df":1},"c":{"docs":{"23":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"q":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}},"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"b":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951}},"df":10,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"0":{"docs":{"21":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":6,"^":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"1":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":4},"2":{"docs":{"14":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"27":{"tf":1.0}},"df":5}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"d":{"docs":{"12":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0}},"df":3}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"18":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":2.0},"9":{"tf":1.7320508075688772}},"df":2},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}},"df":4,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}}}},"n":{"docs":{"20":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.4142135623730951},"5":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"29":{"tf":1.0}},"df":3},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2},"t":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.0}},"df":1}}}},"c":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951}},"df":9,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}},"1":{"docs":{"21":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0}},"df":3},"2":{"docs":{"26":{"tf":1.0},"8":{"tf":1.0}},"df":2},"3":{"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6},"4":{"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.4142135623730951},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":9,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}},"/":{"docs":{},"df":0,"4":{"docs":{"9":{"tf":1.0}},"df":1}}},"5":{"docs":{"10":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,"^":{"docs":{},"df":0,"2":{"docs":{"18":{"tf":1.0}},"df":1}}},"6":{"docs":{"18":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6},"_":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"2":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":4},"k":{"docs":{"16":{"tf":1.0}},"df":1},"n":{"docs":{"0":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":5}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"’":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"20":{"tf":2.0}},"df":2,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":2.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.0}},"df":3}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"25":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}},"df":7}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"28":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0}},"df":13},"f":{"docs":{"23":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":2,"i":{"docs":{"15":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":4},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0}},"df":2,"\'":{"docs":{"5":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}},"df":6}}}},"n":{"docs":{"20":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.4142135623730951},"24":{"tf":1.0},"27":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"21":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":7}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"e":{"docs":{"22":{"tf":1.0},"23":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"7":{"tf":1.0}},"df":6}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"19":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"10":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"5":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"11":{"tf":1.4142135623730951},"12":{"tf":2.23606797749979},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":11,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}},"z":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}}}},"_":{"docs":{"14":{"tf":1.0}},"df":1,"0":{"docs":{"12":{"tf":1.0}},"df":1},"n":{"docs":{"12":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":2},"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2,"+":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0}},"df":1}}}},"n":{"docs":{"13":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"28":{"tf":1.0}},"df":7}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"28":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"20":{"tf":1.0},"28":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.7320508075688772},"21":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.7320508075688772}},"df":6}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"s":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"22":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"14":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":2.0},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.4142135623730951}},"df":4}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}}},"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"2":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}}}}},"{":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.4142135623730951}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":2}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"30":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.4142135623730951}},"df":1},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"df":3,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"’":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0},"20":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":3}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2},"t":{"docs":{"11":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":4}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"y":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"29":{"tf":1.0}},"df":5},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":11,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":9}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":4}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1},"s":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0}},"df":2,"i":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0}},"df":3,"u":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"n":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"3":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"27":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"25":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":2.0}},"df":1}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":5}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":6}}},"v":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"x":{"docs":{"21":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"28":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"14":{"tf":2.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}},"df":2}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"3":{"tf":1.0}},"df":4}}}}},"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0}},"df":2,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":12}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":2.0},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"29":{"tf":1.4142135623730951},"30":{"tf":1.4142135623730951}},"df":8,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"/":{"docs":{},"df":0,"2":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}}},"/":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{"22":{"tf":2.0}},"df":1},"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":2}}}}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1,"n":{"docs":{"0":{"tf":1.7320508075688772},"15":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.4142135623730951}},"df":1},"o":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.4142135623730951},"30":{"tf":1.7320508075688772}},"df":2}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"df":6}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"13":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":4}}}},"x":{"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":3}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.7320508075688772}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}},"t":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.7320508075688772},"16":{"tf":1.7320508075688772},"19":{"tf":2.8284271247461903},"22":{"tf":1.0},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":8,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}}}}}}}}},"1":{"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":10,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}}}}}}}},"2":{"docs":{"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":6},"3":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2},"4":{"docs":{"6":{"tf":1.0}},"df":1},"5":{"docs":{"20":{"tf":1.0},"9":{"tf":1.0}},"df":2},"7":{"docs":{"8":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"g":{"docs":{"21":{"tf":1.4142135623730951},"25":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4},"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"3":{"tf":1.0}},"df":5},"t":{"docs":{"20":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"9":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"14":{"tf":1.7320508075688772},"22":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}},"j":{"docs":{"22":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":2.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"b":{"docs":{"24":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.7320508075688772},"25":{"tf":1.0}},"df":2}}}},"k":{"docs":{"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"24":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"df":5}}}}}}}}}},"l":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}},"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"z":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"z":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":2.23606797749979},"10":{"tf":2.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.7320508075688772},"30":{"tf":1.7320508075688772},"6":{"tf":1.0},"8":{"tf":2.0},"9":{"tf":1.0}},"df":22,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"20":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":7},"1":{"docs":{"9":{"tf":1.0}},"df":1},"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"28":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":3}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{"8":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{"3":{"tf":1.0}},"df":1}}},"e":{"docs":{"2":{"tf":1.0},"28":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":2.0},"9":{"tf":1.0}},"df":11}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.7320508075688772},"25":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"v":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2},"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{"12":{"tf":1.4142135623730951},"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4,"/":{"docs":{},"df":0,"2":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}},"_":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1},"1":{"docs":{"17":{"tf":1.0}},"df":1},"2":{"docs":{"17":{"tf":1.0}},"df":1},"k":{"docs":{"17":{"tf":1.4142135623730951}},"df":1},"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"k":{"docs":{"17":{"tf":1.0}},"df":1}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":18}},"k":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}},"p":{"docs":{"8":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"22":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":3}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"3":{"tf":1.0}},"df":1},"x":{"docs":{"17":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0}},"df":3,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"6":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"28":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":7,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":5}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{"12":{"tf":1.7320508075688772},"13":{"tf":2.0},"14":{"tf":2.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"21":{"tf":3.1622776601683795},"22":{"tf":1.7320508075688772},"23":{"tf":3.4641016151377544},"27":{"tf":1.0},"29":{"tf":1.4142135623730951},"30":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":12,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"+":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"2":{"docs":{"21":{"tf":1.0}},"df":1},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"23":{"tf":1.0}},"df":1}}},"^":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.4142135623730951}},"df":1}},"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"24":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":2}}}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3}},"g":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0}},"df":4},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"x":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0},"29":{"tf":1.0}},"df":2}},"n":{"docs":{"14":{"tf":1.0}},"df":1,"e":{"docs":{"6":{"tf":1.4142135623730951}},"df":1},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"20":{"tf":1.0}},"df":1},"h":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":3}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}},"}":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}},"2":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"9":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951}},"df":2}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}},"2":{"docs":{"22":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"m":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"30":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":12,"c":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"p":{"docs":{"16":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.0}},"df":3}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":9}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"k":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.4142135623730951},"16":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"b":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0}},"df":3}}},"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"30":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":8}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":3,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"29":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}}}}},"p":{"docs":{"10":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":6,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{"10":{"tf":1.4142135623730951}},"df":1,"s":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}},".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"q":{"docs":{"25":{"tf":1.0}},"df":1}},"_":{"docs":{"0":{"tf":1.0}},"df":1,"0":{"docs":{"0":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}}},"{":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"23":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":9,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"k":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}},"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"k":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4}}}}}}}}}}}}}}}}}}}}}}},"m":{"docs":{"1":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"29":{"tf":1.0}},"df":2,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"22":{"tf":1.0}},"df":1}}},"s":{"docs":{"3":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"/":{"docs":{},"df":0,"7":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1},"t":{"docs":{"27":{"tf":1.0}},"df":1}}},"d":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":6,".":{"docs":{},"df":0,"b":{"docs":{"19":{"tf":1.0}},"df":1},"c":{"docs":{"19":{"tf":1.0}},"df":1},"e":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":10,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0},"12":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"r":{"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0}},"df":4,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"^":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"0":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"1":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"n":{"docs":{"12":{"tf":1.0}},"df":1,"]":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}}}}}}}}},"_":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.0}},"df":1}}},"k":{"docs":{"24":{"tf":1.0},"29":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1},"i":{"docs":{"3":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":2.0}},"df":9,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0}},"df":1},"1":{"docs":{"10":{"tf":1.0}},"df":1},"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1},"2":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"w":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"24":{"tf":1.0},"30":{"tf":1.0}},"df":4}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}},"df":2,"(":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}},"t":{"docs":{"6":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"20":{"tf":1.0}},"df":1}}}},"q":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"8":{"tf":3.1622776601683795},"9":{"tf":1.4142135623730951}},"df":8,"^":{"docs":{"8":{"tf":1.0}},"df":1,"{":{"docs":{"8":{"tf":1.4142135623730951}},"df":1,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}}}}},"l":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":13}}}},"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{"26":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":3,"^":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2},"{":{"docs":{},"df":0,"2":{"docs":{"8":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":15,"(":{"docs":{},"df":0,"1":{"docs":{"1":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":10,"0":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0}},"df":1}},"5":{"docs":{"19":{"tf":1.0}},"df":1},"7":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"2":{"docs":{},"df":0,"1":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"3":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0}},"df":3},"5":{"docs":{"18":{"tf":1.0},"9":{"tf":1.0}},"df":2},"6":{"docs":{"5":{"tf":1.0}},"df":1},"7":{"docs":{"22":{"tf":1.0}},"df":1},"9":{"docs":{"14":{"tf":1.7320508075688772},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0}},"df":4},"n":{"docs":{"13":{"tf":1.0},"17":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":9}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"16":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}},"l":{"docs":{"6":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"z":{"docs":{"10":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"28":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":2}},"v":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.0},"28":{"tf":1.0},"6":{"tf":1.0}},"df":6}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.4142135623730951}},"df":10,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"20":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}}}}}}}}}}}},"t":{"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}}}}}}}}}}}},"s":{"docs":{"14":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.0}},"df":3}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":9,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"27":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"28":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"23":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"v":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}},"df":6,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"1":{"docs":{},"df":0,"]":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"20":{"tf":1.4142135623730951},"22":{"tf":1.0}},"df":2}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"w":{"docs":{"7":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":5}}},"s":{"docs":{"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":2.0},"3":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":6,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}},"z":{"docs":{},"df":0,"^":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}}}},"^":{"docs":{},"df":0,"2":{"docs":{"8":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0}},"df":4},"p":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"19":{"tf":1.0}},"df":3}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}},"df":2}},"e":{"docs":{"7":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0},"26":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"e":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2},"n":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0}},"df":1}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"28":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7}}}}},"t":{"docs":{"6":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"27":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"p":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"28":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0},"28":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0},"29":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"v":{"docs":{"18":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{"10":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}},"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"y":{"docs":{"8":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}}},"e":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.4142135623730951}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"21":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{"25":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"29":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"m":{"docs":{"29":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.4142135623730951},"28":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"24":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2}}}}}},"t":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":2.23606797749979},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"28":{"tf":1.4142135623730951},"29":{"tf":1.0}},"df":11}},"k":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":2}},"l":{"docs":{},"df":0,"k":{"docs":{"5":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.23606797749979},"22":{"tf":1.0}},"df":5}}},"h":{"docs":{"17":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.0}},"df":4}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":5,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}},"o":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}},"p":{"docs":{"17":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"m":{"docs":{"6":{"tf":1.0}},"df":1},"p":{"docs":{"18":{"tf":1.0},"5":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"24":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"4":{"tf":1.0}},"df":2},"o":{"docs":{"25":{"tf":1.0}},"df":1}}}},"u":{"docs":{"11":{"tf":2.23606797749979},"13":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}},"df":5,"n":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"df":3},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"k":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2}}}}},"p":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0}},"df":2},"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"10":{"tf":2.449489742783178},"12":{"tf":1.7320508075688772},"13":{"tf":1.7320508075688772},"14":{"tf":2.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"19":{"tf":2.0},"20":{"tf":2.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":2.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":19}},"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"30":{"tf":1.0}},"df":2}},"u":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"28":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":7}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"19":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2},"1":{"docs":{"7":{"tf":1.0}},"df":1},"2":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}},":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.7320508075688772},"28":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":6,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":2}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"28":{"tf":1.4142135623730951}},"df":5,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{"20":{"tf":1.4142135623730951},"24":{"tf":1.0},"28":{"tf":1.7320508075688772}},"df":3}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"29":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"w":{"docs":{"22":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"y":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.7320508075688772},"29":{"tf":1.4142135623730951}},"df":5}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":4}},"s":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"28":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"30":{"tf":1.0}},"df":3,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"2":{"tf":1.7320508075688772}},"df":1}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{"0":{"tf":1.0},"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":2.23606797749979},"28":{"tf":1.0},"29":{"tf":1.4142135623730951},"8":{"tf":2.23606797749979},"9":{"tf":1.7320508075688772}},"df":10,"s":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"+":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}},")":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}}}},"y":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{"21":{"tf":1.0}},"df":1,"1":{"docs":{"22":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"z":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":2.6457513110645907},"11":{"tf":1.7320508075688772},"19":{"tf":1.0}},"df":4,"2":{"docs":{"10":{"tf":1.0}},"df":1},"^":{"docs":{},"df":0,"2":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0}},"df":3},"k":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"30":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"k":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":7},"f":{"docs":{},"df":0,"i":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":4}}}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":7}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"10":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":6}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":4}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0}},"df":9}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":7}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}},"df":4}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0}},"df":4}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":4}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0}},"df":8,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0},"29":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0}},"df":4}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":4}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"27":{"tf":1.0}},"df":5}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{"10":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"k":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0},"23":{"tf":1.0}},"df":2},"f":{"docs":{},"df":0,"i":{"docs":{"28":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"d":{"docs":{"8":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"10":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"19":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"k":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"k":{"docs":{"21":{"tf":1.0},"29":{"tf":1.0}},"df":2}}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"24":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0},"29":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}},"s":{"docs":{"8":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"30":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"19":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}},"documentStore":{"save":true,"docs":{"0":{"body":"oplattice computes with classical orthogonal polynomials on lattices\\nusing exact rational arithmetic throughout. No floating point is involved\\nanywhere: every number is an arbitrary-precision fraction, every reported\\nequality is exact, and every verdict the library emits is a statement it has\\nverified, not approximated. The library works both directions of the classical correspondence: Forward. Given Pearson data — a pair of polynomials phi(z) = a z^2 + b z + c and psi(z) = d z + e — and a lattice, it\\ndecides how far the associated functional is regular and produces the\\ncoefficients B_n, C_{n+1} of the monic three-term recurrence P_{n+1}(z) = (z - B_n) P_n(z) - C_n P_{n-1}(z), P_{-1} = 0, P_0 = 1. Inverse. Given only the recurrence coefficients of a sequence, it\\ndecides whether the sequence is classical on a given lattice — and if so,\\nrecovers the Pearson data that generates it. A complete worked example, the finite para-Krawtchouk family on a\\nbi-lattice, ships with the library together with its weights, exact\\northogonality checks, and its reclassification as a classical family on the\\nlinear lattice x(s) = 2s + 1.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse oplattice::para_krawtchouk::{pk_casestudy, ParaKrawtchoukParams};\\nuse oplattice::detector::Verdict;\\nuse oplattice::scalar::rat; let params = ParaKrawtchoukParams::new(5, rat(1, 2)).unwrap();\\nlet report = pk_casestudy(&params); // classical on x(s) = 2s + 1 ...\\nassert!(matches!(report.runs[0].1, Some(Verdict::Classical { .. })));\\n// ... but not on x(s) = 3s\\nassert!(matches!(report.runs[1].1, Some(Verdict::NotClassical { .. })));\\n// and its finite functional is exactly orthogonal with unit total mass\\nassert!(report.gram.orthogonal);\\nassert_eq!(report.weight_sum, oplattice::scalar::int(1)); }","breadcrumbs":"Introduction » A three-line taste","id":"1","title":"A three-line taste"},"10":{"body":"For a polynomial p in the lattice variable z = x(s), the operators D\\nand S are defined pointwise by Dp(x(s)) = [ p(x(s+1/2)) - p(x(s-1/2)) ] / [ x(s+1/2) - x(s-1/2) ]\\nSp(x(s)) = [ p(x(s+1/2)) + p(x(s-1/2)) ] / 2 and both right-hand sides are again polynomials in z: D lowers degree by\\nexactly one, S preserves it. The library realizes them by sampling the\\ndefining identities at enough lattice points with distinct values and\\ninterpolating — exact, because everything in sight is rational. #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::poly::Polynomial;\\nuse oplattice::scalar::{int, rat}; let l = Lattice::quadratic(int(2), int(-3), int(1)).unwrap();\\nlet (alpha, beta) = l.alpha_beta(); let z = Polynomial::monomial(1);\\nlet z2 = Polynomial::monomial(2); // D z = 1 and S z = alpha z + beta\\nassert_eq!(l.d_op(&z).unwrap(), Polynomial::one());\\nassert_eq!( l.s_op(&z).unwrap(), Polynomial::from_coeffs(vec![beta.clone(), alpha.clone()])\\n); // D z^2 = 2 alpha z + 2 beta\\nassert_eq!( l.d_op(&z2).unwrap(), Polynomial::from_coeffs(vec![int(2) * &beta, int(2) * &alpha])\\n); } One quadratic lattice is special: c4 = c5 = 0 makes x(s) constant, and\\nthe operators degenerate to the ordinary derivative and the identity. That\\nconstant lattice is how the continuous classical families (Hermite,\\nLaguerre, Jacobi) enter this framework: #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::poly::Polynomial;\\nuse oplattice::scalar::int; let l = Lattice::quadratic(int(0), int(0), int(1)).unwrap();\\nassert!(l.is_constant()); let p = Polynomial::from_coeffs(vec![int(1), int(2), int(3)]);\\nassert_eq!(l.d_op(&p).unwrap(), p.derivative());\\nassert_eq!(l.s_op(&p).unwrap(), p); }","breadcrumbs":"Lattices and the Operators D and S » The x-derivative and the x-average","id":"10","title":"The x-derivative and the x-average"},"11":{"body":"A linear functional u on polynomials is classical on a lattice when it\\nsatisfies the Pearson-type equation D(phi u) = S(psi u) for some polynomials phi(z) = a z^2 + b z + c (nonzero, degree at most 2)\\nand psi(z) = d z + e (degree one). The five coefficients are the PearsonData of the functional. Classic example: the Hermite weight\\nsatisfies (phi u)\' = psi u with phi = -1/2 and psi = z, which is\\nexactly this equation on the constant lattice where D is the derivative\\nand S the identity.","breadcrumbs":"From Pearson Data to Recurrence Coefficients » From Pearson Data to Recurrence Coefficients","id":"11","title":"From Pearson Data to Recurrence Coefficients"},"12":{"body":"Not every Pearson pair admits orthogonal polynomials of every degree.\\nDefine q-linear: d_n = a gamma_n + d alpha_n e_n = (2a c3 + b) gamma_n + (d c3 + e) alpha_n\\nquadratic: d_n = a n + d e_n = b n + e + (1/2) c4 d n^2 together with a degree-two polynomial phi^[n] built from the data (see phi_n). The functional is regular through degree M exactly when, for\\nevery n up to M, d_n != 0 and phi^[n](point_n) != 0, where point_n is c3 - e_n/d_{2n} on q-linear lattices and -(1/4) c4 n^2 - e_n/d_{2n} on quadratic ones. regularity checks the\\nconditions index by index and reports the first failure as data: #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::pearson::{regularity, FailureReason, PearsonData};\\nuse oplattice::scalar::{int, rat}; let hermite = PearsonData::new(int(0), int(0), rat(-1, 2), int(1), int(0)).unwrap();\\nlet constant = Lattice::quadratic(int(0), int(0), int(1)).unwrap();\\nassert!(regularity(&hermite, &constant, 20).is_regular()); // d = 0 fails immediately: d_0 = 0\\nlet bad = PearsonData::new(int(0), int(1), int(1), int(0), int(1)).unwrap();\\nlet report = regularity(&bad, &constant, 5);\\nlet failure = report.first_failure.unwrap();\\nassert_eq!((failure.n, failure.reason), (0, FailureReason::DnZero)); }","breadcrumbs":"From Pearson Data to Recurrence Coefficients » Regularity","id":"12","title":"Regularity"},"13":{"body":"Under regularity the monic orthogonal sequence of u satisfies the\\nthree-term recurrence with explicit coefficients. On quadratic lattices: B_n = n e_{n-1}/d_{2n-2} - (n+1) e_n/d_{2n} - (1/2) c4 n (n-1)\\nC_{n+1} = -(n+1) d_{n-1} / (d_{2n-1} d_{2n+1}) * phi^[n](point_n) and on q-linear lattices the same shape with gamma-weights and a leading c3. RecurrenceEngine evaluates them; for Hermite data the classic\\ntable drops out: #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::pearson::{PearsonData, RecurrenceEngine};\\nuse oplattice::scalar::{int, rat}; let pd = PearsonData::new(int(0), int(0), rat(-1, 2), int(1), int(0)).unwrap();\\nlet l = Lattice::quadratic(int(0), int(0), int(1)).unwrap();\\nlet engine = RecurrenceEngine::new(&pd, &l);\\nfor n in 0..=20 { let (b, c) = engine.pair(n).unwrap(); assert_eq!(b, int(0)); assert_eq!(c, rat(n as i64 + 1, 2)); // C_{n+1} = (n+1)/2\\n} }","breadcrumbs":"From Pearson Data to Recurrence Coefficients » Recurrence coefficients","id":"13","title":"Recurrence coefficients"},"14":{"body":"The displays above are formulas in n, and perfectly good finite families\\nstep on their singularities. For the para-Krawtchouk data of a later\\nchapter, e_n and d_{2n} vanish simultaneously at one index — the\\nliteral quotient is 0/0 even though the coefficient itself is a definite\\nrational number. The engine therefore treats each coefficient as a univariate rational\\nfunction of the index (in n itself on quadratic lattices, in t = r^n on\\nq-linear ones), reduces it once, and evaluates the reduced form. Where the\\nliteral formula is defined the two agree; at a removable point the reduced\\nform still produces the exact value; a non-removable pole surfaces as Error::DivisionByZeroInFormula: #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::pearson::{PearsonData, RecurrenceEngine};\\nuse oplattice::scalar::{int, rat}; // para-Krawtchouk Pearson data (N = 5, gamma = 1/2) on x(s) = 2s + 1:\\n// here e_2/d_4 is literally 0/0, yet B_2 = 9/4 exactly.\\nlet pd = PearsonData::new(rat(-1, 4), rat(9, 8), rat(-9, 4), int(1), rat(-9, 4)).unwrap();\\nlet l = Lattice::quadratic(int(0), int(2), int(1)).unwrap();\\nlet engine = RecurrenceEngine::new(&pd, &l);\\nassert_eq!(engine.b(2).unwrap(), rat(9, 4));\\nassert_eq!(engine.c_next(2).unwrap(), rat(9, 16)); } The n = 0 coefficients use their own closed forms — the e_{n-1}/d_{2n-2} term of B_0 vanishes with its prefactor, and the d_{-1} factor of C_1 cancels between numerator and denominator — so B_0 = c3 - e_0/d_0 (just -e for normalized quadratic data) and C_1 = -phi^[0](point_0)/d_1. Those forms are what the moment functional\\nitself dictates, which the test suite verifies against an independent\\nmoment-recursion oracle.","breadcrumbs":"From Pearson Data to Recurrence Coefficients » Evaluation at awkward indices","id":"14","title":"Evaluation at awkward indices"},"15":{"body":"The inverse question: handed only the numbers B_0, B_1, ... and C_1, C_2, ... of a monic three-term recurrence, is the sequence classical\\non a given lattice? classify answers it exactly.","breadcrumbs":"Detecting Classical Families » Detecting Classical Families","id":"15","title":"Detecting Classical Families"},"16":{"body":"A RecurrenceTable stores the pairs (B_n, C_{n+1}); construction\\nenforces quasi-definiteness ( C_k != 0), which is precisely what makes the\\nunderlying functional admit an orthogonal sequence as far as the table\\nreaches. generate unrolls the recurrence into the monic polynomials: #![allow(unused)] fn main() {\\nuse oplattice::recurrence::{generate, RecurrenceTable};\\nuse oplattice::poly::Polynomial;\\nuse oplattice::scalar::{int, rat}; // the Hermite table B_n = 0, C_{n+1} = (n+1)/2\\nlet t = RecurrenceTable::new( vec![int(0), int(0), int(0)], vec![rat(1, 2), int(1), rat(3, 2)],\\n).unwrap();\\nlet ops = generate(&t, 3).unwrap();\\nassert_eq!( ops.poly(3), &Polynomial::from_coeffs(vec![int(0), rat(-3, 2), int(0), int(1)])\\n); }","breadcrumbs":"Detecting Classical Families » Tables and generation","id":"16","title":"Tables and generation"},"17":{"body":"A table determines the moments m_k = <u, z^k> of its functional (with m_0 = 1): m_k is the top-left entry of the k-th power of the truncated\\nmonic Jacobi matrix. moments_from_recurrence computes them; the familiar\\nfirst two are m_1 = B_0 and m_2 = B_0^2 + C_1: #![allow(unused)] fn main() {\\nuse oplattice::recurrence::{moments_from_recurrence, RecurrenceTable};\\nuse oplattice::scalar::{int, rat}; let t = RecurrenceTable::new( vec![int(0); 4], (0..4).map(|n| rat(n + 1, 2)).collect(),\\n).unwrap();\\nlet m = moments_from_recurrence(&t, 8).unwrap();\\nassert_eq!(m[4], rat(3, 4)); // Gaussian: m_{2k} = (2k-1)!!/2^k\\nassert_eq!(m[8], rat(105, 16)); }","breadcrumbs":"Detecting Classical Families » Moments","id":"17","title":"Moments"},"18":{"body":"On a quadratic lattice, evaluating the forward formulas at n = 0, 1 gives\\nfour equations in the four unknowns (a, b, c, e) once d is normalized\\nto 1 (a functional with d = 0 is never regular, so nothing is lost).\\nSolving that system in closed form yields invert_quadratic: with K = 4 c4 c6 - c5^2, e = -B_0\\na = [ B_0^2 + 4C_1 - 2C_2 + (B_1 - c4)^2 - 2B_0(B_1 + c4) + K ] / (6 C_2) and matching closed forms for b and c (see the source for the full\\nexpressions). The shipped formulas were obtained by solving the forward\\nequations symbolically and are audited two independent ways in the test\\nsuite: a 50-instance round-trip property, and agreement with the weak-form\\nmoment solve below on every classical instance. #![allow(unused)] fn main() {\\nuse oplattice::detector::invert_quadratic;\\nuse oplattice::lattice::Lattice;\\nuse oplattice::scalar::{int, rat}; // the para-Krawtchouk table at N = 5, gamma = 1/2 on x(s) = 2s + 1\\nlet l = Lattice::quadratic(int(0), int(2), int(1)).unwrap();\\nlet pd = invert_quadratic(&rat(9, 4), &rat(9, 4), &rat(21, 16), &rat(5, 2), &l).unwrap();\\nassert_eq!((pd.a, pd.e), (rat(-1, 4), rat(-9, 4))); }","breadcrumbs":"Detecting Classical Families » The quadratic-lattice inversion","id":"18","title":"The quadratic-lattice inversion"},"19":{"body":"Pairing the Pearson equation against test polynomials z^k turns it into\\nlinear conditions on the moments: <u, phi * D(z^k) + psi * S(z^k)> = 0 for every k >= 0. Each k contributes one linear equation in the five unknowns (a, b, c, d, e); stacking k = 0..=5 and taking the exact nullspace\\nrecovers every Pearson pair the functional satisfies. This route — pearson_solve_from_moments — is what makes detection work on q-linear\\nlattices, where no closed-form inversion is used, and it doubles as an\\nindependent check of the quadratic inversion: #![allow(unused)] fn main() {\\nuse oplattice::detector::pearson_solve_from_moments;\\nuse oplattice::lattice::Lattice;\\nuse oplattice::scalar::{int, rat}; // Gaussian moments, constant lattice: the nullspace is one-dimensional\\n// and spanned by the Hermite pair phi = -1/2, psi = z.\\nlet l = Lattice::quadratic(int(0), int(0), int(1)).unwrap();\\nlet moments = vec![ int(1), int(0), rat(1, 2), int(0), rat(3, 4), int(0), rat(15, 8), int(0),\\n];\\nlet candidates = pearson_solve_from_moments(&moments, &l).unwrap();\\nassert_eq!(candidates.len(), 1);\\nlet pd = candidates[0].normalized().unwrap();\\nassert_eq!((pd.a, pd.b, pd.c, pd.e), (int(0), int(0), rat(-1, 2), int(0))); }","breadcrumbs":"Detecting Classical Families » The weak-form solve","id":"19","title":"The weak-form solve"},"2":{"body":"The project is a plain Cargo workspace: $ cargo build --workspace # library + `oplattice` binary\\n$ cargo test --workspace # unit, property, acceptance, CLI tests\\n$ cargo test --test acceptance -- --nocapture # per-criterion pass lines\\n$ mdbook build book # this guide Every code block in this guide is compiled and run as a doc-test of the\\nlibrary, so the book cannot drift out of sync with the code.","breadcrumbs":"Introduction » Building and testing","id":"2","title":"Building and testing"},"20":{"body":"classify combines the pieces. Quadratic lattices invert (B_0, B_1, C_1, C_2) in closed form; q-linear lattices compute eight\\nmoments and solve the weak system. Either way every candidate is then pushed\\nback through the forward engine and compared against the whole table — a\\ncandidate becomes a Verdict::Classical only by reproducing every entry\\nexactly up to the requested depth. #![allow(unused)] fn main() {\\nuse oplattice::detector::{classify, Verdict};\\nuse oplattice::lattice::Lattice;\\nuse oplattice::pearson::{PearsonData, RecurrenceEngine};\\nuse oplattice::scalar::{int, rat}; // build a table from known data on a q-lattice, then recover the data\\nlet l = Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap();\\nlet pd = PearsonData::new(rat(1, 7), rat(1, 3), int(5), int(1), rat(-2, 3)).unwrap();\\nlet engine = RecurrenceEngine::new(&pd, &l);\\nlet (mut b, mut c) = (Vec::new(), Vec::new());\\nfor n in 0..=8 { let (bn, cn) = engine.pair(n).unwrap(); b.push(bn); c.push(cn);\\n}\\nlet table = oplattice::recurrence::RecurrenceTable::new(b, c).unwrap(); match classify(&table, &l, 8).unwrap() { Verdict::Classical { pd: recovered, verified_to } => { assert_eq!(recovered, pd); assert_eq!(verified_to, 8); } other => panic!(\\"expected Classical, got {other:?}\\"),\\n} } The negative outcomes carry evidence too: NotClassical names the first\\ntable entry no candidate could reproduce (or no witness at all when the weak\\nsystem has no solution), and Degenerate reports candidates that exist but\\ncannot generate any regular functional (for instance d = 0). A note on depth: verification needs verify_to >= 2 — entries n = 0, 1\\nfeed the inversion, so the first genuinely checked index is n = 2 — and a\\ntable of at least verify_to + 1 pairs. How many exact matches constitute\\nconviction is the caller’s policy; the CLI defaults to 12.","breadcrumbs":"Detecting Classical Families » The verdict","id":"20","title":"The verdict"},"21":{"body":"The para-Krawtchouk polynomials are a finite family: for a fixed odd\\ninteger N and a parameter 0 < gamma < 2 they are orthogonal on the N + 1 points of a bi-lattice y(s) = s + (1/2)(gamma - 1)(1 - (-1)^s) s = 0, 1, ..., N which interleaves the even integers 0, 2, 4, ... with the shifted odd\\nprogression gamma, gamma + 2, .... Their recurrence coefficients are, for n < N, B_n = (N + gamma - 1)/2 (constant!)\\nC_{n+1} = -(n+1)(n-N)(2n+1-N-gamma)(2n+1-N+gamma) --------------------------------------- 4 (2n-N)(2n-N+2) with every C_1..C_N strictly positive and C_{N+1} = 0 — the (n - N)\\nfactor closes the finite frame exactly at degree N. #![allow(unused)] fn main() {\\nuse oplattice::para_krawtchouk::{pk_recurrence, ParaKrawtchoukParams};\\nuse oplattice::scalar::rat; let p = ParaKrawtchoukParams::new(5, rat(1, 2)).unwrap();\\nlet (b0, c1) = pk_recurrence(&p, 0).unwrap();\\nassert_eq!(b0, rat(9, 4));\\nassert_eq!(c1, rat(21, 16)); }","breadcrumbs":"The Para-Krawtchouk Family » The Para-Krawtchouk Family","id":"21","title":"The Para-Krawtchouk Family"},"22":{"body":"The orthogonality weights come in two branches, one per parity, built from\\nrising factorials (x)_k = x(x+1)...(x+k-1) with J = (N-1)/2: omega_1(m) = 2^{-N} (1 - gamma/2)_J / (1/2)_J * (-J)_{m/2} (-gamma/2 - J)_{m/2} / [ (m/2)! (1 - gamma/2)_{m/2} ] omega_2(m) = 2^{-N} (1 + gamma/2)_J / (1/2)_J * (-J)_{m/2} (gamma/2 - J)_{m/2} / [ (m/2)! (1 + gamma/2)_{m/2} ] Even s takes omega_1 with m = s; odd s takes omega_2 with m = s - 1. The branch prefactors pair (1 - gamma/2)_J with the even\\nbranch and (1 + gamma/2)_J with the odd one; with this pairing — and only\\nwith it — the functional reproduces the weights that the recurrence table\\nitself determines through its moments, the Gram matrix of the family is\\nexactly diagonal, and the total mass is exactly 1. All three facts are\\nverified, not assumed, in the test suite, with the weight values checked\\nagainst an independent solve of the moment equations on the nodes. #![allow(unused)] fn main() {\\nuse oplattice::para_krawtchouk::{pk_functional, ParaKrawtchoukParams};\\nuse oplattice::scalar::{int, rat}; let p = ParaKrawtchoukParams::new(5, rat(1, 2)).unwrap();\\nlet u = pk_functional(&p);\\nassert_eq!(u.nodes()[1], rat(1, 2)); // y(1) = gamma\\nassert_eq!(u.weights()[0], rat(7, 128));\\nassert!(u.weights().iter().all(|w| w > &int(0))); // positive-definite frame\\nassert_eq!(u.total_mass(), int(1)); }","breadcrumbs":"The Para-Krawtchouk Family » Weights","id":"22","title":"Weights"},"23":{"body":"Although the family lives on a bi-lattice, its support is also the image of\\nan ordinary linear lattice: with x(s) = 2s + 1, y({0, ..., N}) = x(V_N), V_N = {-1/2, gamma/2 - 1/2, 1/2, gamma/2 + 1/2, ...} so nothing stops the detector from asking whether the table is classical on x(s) = 2s + 1. It is — with Pearson data, for every admissible pair (N, gamma): a = 1/(1 - N) b = (N + gamma - 1)/(N - 1)\\nc = (1 - N - gamma)/2 d = 1 e = (1 - N - gamma)/2 while the same question for x(s) = 3s comes back negative. The whole\\nexperiment is packaged as pk_casestudy: #![allow(unused)] fn main() {\\nuse oplattice::detector::Verdict;\\nuse oplattice::para_krawtchouk::{pk_casestudy, ParaKrawtchoukParams};\\nuse oplattice::scalar::rat; let p = ParaKrawtchoukParams::new(5, rat(1, 2)).unwrap();\\nlet report = pk_casestudy(&p); // run 0: x(s) = 2s + 1 -> classical, with the data above at N = 5, gamma = 1/2\\nmatch report.runs[0].1.as_ref().unwrap() { Verdict::Classical { pd, .. } => { assert_eq!(pd.a, rat(-1, 4)); assert_eq!(pd.b, rat(9, 8)); assert_eq!(pd.c, rat(-9, 4)); assert_eq!(pd.e, rat(-9, 4)); } other => panic!(\\"unexpected verdict {other:?}\\"),\\n} // run 1: x(s) = 3s -> not classical\\nassert!(matches!( report.runs[1].1.as_ref().unwrap(), Verdict::NotClassical { .. }\\n)); } Two boundary remarks. First, the recovered data is not regular in the\\nunbounded sense — d_n = n/(1 - N) + 1 vanishes at n = N - 1, as it must\\nfor a family that stops at degree N; the recurrence engine’s\\nrational-function evaluation is what carries the verification cleanly across\\nthat point. Second, N = 1 is a two-point family whose table has a single\\npair, and four values (B_0, B_1, C_1, C_2) are needed before\\nclassification is even posable — the case study runs its orthogonality\\nchecks but reports the classification as not evaluable.","breadcrumbs":"The Para-Krawtchouk Family » Classical after all","id":"23","title":"Classical after all"},"24":{"body":"The oplattice binary batch-processes JSON job documents: $ oplattice <command> --input <file> [--json] [--out <file>] [--verify-to <k>] command needs produces recurrence lattice, pearson, n_max recurrence table + regularity report classify lattice, table (+ verify_to) classicality verdict para-krawtchouk pk (+ optional lattice override) full case-study report sweep grid one verdict record per grid point By default the human-readable summary goes to stdout. --json prints the\\nmachine document instead; --out <file> writes the machine document to a\\nfile (the summary still goes to stdout). Reruns on the same input are\\nbyte-identical. Exit codes: 0 success, 2 invalid input, 3 mathematical degeneracy\\n(a regularity failure truncated the requested computation). Valid documents\\nnever crash the tool; negative verdicts are ordinary successes.","breadcrumbs":"The Command-Line Interface » The Command-Line Interface","id":"24","title":"The Command-Line Interface"},"25":{"body":"Every number in a document is an exact rational: a string \\"p/q\\" or \\"p\\",\\nor a plain JSON integer. Floating-point literals are rejected, as is any\\nunknown field — a typo fails the run instead of silently changing it.","breadcrumbs":"The Command-Line Interface » Rationals and strictness","id":"25","title":"Rationals and strictness"},"26":{"body":"Lattices: {\\"kind\\": \\"quadratic\\", \\"c4\\": 0, \\"c5\\": 2, \\"c6\\": 1}\\n{\\"kind\\": \\"qlinear\\", \\"r\\": 2, \\"c1\\": \\"1/2\\", \\"c2\\": \\"1/2\\", \\"c3\\": 0} ( r is the square root of q, so the second lattice has q = 4.)","breadcrumbs":"The Command-Line Interface » Document reference","id":"26","title":"Document reference"},"27":{"body":"{ \\"lattice\\": {\\"kind\\": \\"quadratic\\", \\"c4\\": 0, \\"c5\\": 0, \\"c6\\": 1}, \\"pearson\\": {\\"a\\": 0, \\"b\\": 0, \\"c\\": \\"-1/2\\", \\"d\\": 1, \\"e\\": 0}, \\"n_max\\": 3\\n} emits the pairs (B_n, C_{n+1}) for n = 0..n_max-1: { \\"command\\": \\"recurrence\\", \\"table\\": { \\"B\\": [\\"0\\", \\"0\\", \\"0\\"], \\"C\\": [\\"1/2\\", \\"1\\", \\"3/2\\"] }, \\"regularity\\": { \\"regular_to\\": 2 }\\n} If regularity fails before n_max, the pairs computed so far are still\\nemitted together with \\"truncated_at\\", and the exit code is 3. The table\\nsection is deliberately shaped so it can be pasted straight into a classify document.","breadcrumbs":"The Command-Line Interface » recurrence","id":"27","title":"recurrence"},"28":{"body":"{ \\"lattice\\": {\\"kind\\": \\"quadratic\\", \\"c4\\": 0, \\"c5\\": 2, \\"c6\\": 1}, \\"table\\": { \\"B\\": [\\"9/4\\", \\"9/4\\", \\"9/4\\", \\"9/4\\", \\"9/4\\"], \\"C\\": [\\"21/16\\", \\"5/2\\", \\"9/16\\", \\"5/2\\", \\"21/16\\"] }, \\"verify_to\\": 4\\n} The summary line mirrors the verdict — The sequence is classical for x(s) = 2s + 1 a = -1/4 b = 9/8 c = -9/4 e = -9/4 — and the machine document carries verdict, the recovered pearson data\\nwhen classical, a mismatch witness when not, and a reason when\\ndegenerate. verify_to defaults to 12; a table shorter than verify_to + 1 pairs is rejected (exit 2) rather than silently verified\\nless deeply. The --verify-to flag overrides the document value.","breadcrumbs":"The Command-Line Interface » classify","id":"28","title":"classify"},"29":{"body":"{\\"pk\\": {\\"N\\": 5, \\"gamma\\": \\"1/2\\"}} runs the whole case study: the table, nodes, weights, weight sum, the exact\\nGram diagnostic, and classification against both x(s) = 2s + 1 and x(s) = 3s (or against a single lattice given as an override). Parameter\\nviolations — even N, gamma outside (0, 2) — exit with 2.","breadcrumbs":"The Command-Line Interface » para-krawtchouk","id":"29","title":"para-krawtchouk"},"3":{"body":"module contents scalar exact rationals ( Scalar), parsing and formatting poly dense polynomials, Lagrange interpolation linalg exact matrices, fraction-free nullspace lattice lattice values, structural constants, the operators D and S pearson forward direction: regularity and recurrence coefficients recurrence polynomial generation, moments, Gram checks, weak Pearson form detector inverse direction: classicality verdicts para_krawtchouk the finite bi-lattice family, end to end","breadcrumbs":"Introduction » Crate layout","id":"3","title":"Crate layout"},"30":{"body":"{ \\"grid\\": { \\"N\\": [3, 5], \\"gamma\\": [\\"1/3\\", \\"1/2\\"], \\"lattices\\": [ {\\"kind\\": \\"quadratic\\", \\"c4\\": 0, \\"c5\\": 2, \\"c6\\": 1}, {\\"kind\\": \\"quadratic\\", \\"c4\\": 0, \\"c5\\": 3, \\"c6\\": 0} ] }\\n} produces one record per (N, gamma, lattice) point, ordered with N\\noutermost and the lattice innermost, regardless of how the work is\\nscheduled. The whole grid is validated before any point runs; an empty grid\\nis a successful run with zero records.","breadcrumbs":"The Command-Line Interface » sweep","id":"30","title":"sweep"},"4":{"body":"Everything in oplattice is built on one number type.","breadcrumbs":"Scalars, Polynomials, and Exact Linear Algebra » Scalars, Polynomials, and Exact Linear Algebra","id":"4","title":"Scalars, Polynomials, and Exact Linear Algebra"},"5":{"body":"A Scalar is an arbitrary-precision rational, always stored reduced with\\na positive denominator. The scalar module adds the small vocabulary the\\nrest of the crate speaks: #![allow(unused)] fn main() {\\nuse oplattice::scalar::{int, rat, pow_i, parse_scalar, format_scalar}; let x = rat(6, -4); // normalized on construction\\nassert_eq!(format_scalar(&x), \\"-3/2\\"); assert_eq!(pow_i(&int(2), -3), rat(1, 8)); // exact negative powers // the CLI\'s rational literals round-trip through the same helpers\\nlet y = parse_scalar(\\"22/7\\").unwrap();\\nassert_eq!(format_scalar(&y), \\"22/7\\");\\nassert!(parse_scalar(\\"0.5\\").is_none()); // floats are never accepted } Arithmetic is exact and closed; there is no rounding to talk about, so\\nequality assertions in this book are plain ==.","breadcrumbs":"Scalars, Polynomials, and Exact Linear Algebra » Scalars","id":"5","title":"Scalars"},"6":{"body":"Polynomial stores dense coefficients, lowest degree first, with trailing\\nzeros trimmed so the representation is canonical. The zero polynomial has\\ndegree None — a real “minus infinity”, which keeps statements like\\n“ D lowers degree by one” honest at the bottom: #![allow(unused)] fn main() {\\nuse oplattice::poly::Polynomial;\\nuse oplattice::scalar::{int, rat}; let p = Polynomial::from_coeffs(vec![rat(-1, 2), int(3)]); // 3z - 1/2\\nassert_eq!(p.degree(), Some(1));\\nassert_eq!(p.eval(&rat(1, 3)), rat(1, 2)); assert_eq!(Polynomial::zero().degree(), None); } Lagrange interpolation recovers the unique polynomial through a set of\\npoints with pairwise-distinct abscissae — the workhorse behind the lattice\\noperators of the next chapter: #![allow(unused)] fn main() {\\nuse oplattice::poly::{interpolate, Polynomial};\\nuse oplattice::scalar::int; let pts = [(int(0), int(0)), (int(1), int(1)), (int(2), int(4))];\\nassert_eq!(interpolate(&pts).unwrap(), Polynomial::monomial(2)); }","breadcrumbs":"Scalars, Polynomials, and Exact Linear Algebra » Polynomials","id":"6","title":"Polynomials"},"7":{"body":"The detector reduces “is this sequence classical?” to an exact linear\\nquestion. nullspace computes a basis of the right nullspace by\\nfraction-free elimination: rows are scaled to integers, eliminated with\\ncross-multiplication, and only the final back-substitution returns to\\nrationals. Each basis vector is normalized so its first nonzero entry is 1,\\nmaking outputs deterministic: #![allow(unused)] fn main() {\\nuse oplattice::linalg::{nullspace, Matrix};\\nuse oplattice::scalar::int; let m = Matrix::from_rows(vec![ vec![int(1), int(1)], vec![int(2), int(2)],\\n]);\\nassert_eq!(nullspace(&m), vec![vec![int(1), int(-1)]]);\\nassert!(nullspace(&Matrix::identity(3)).is_empty()); }","breadcrumbs":"Scalars, Polynomials, and Exact Linear Algebra » Exact nullspaces","id":"7","title":"Exact nullspaces"},"8":{"body":"A lattice is a map x(s) of one of two shapes: q-linear: x(s) = c1 q^{-s} + c2 q^{s} + c3 (q > 0, q != 1)\\nquadratic: x(s) = c4 s^2 + c5 s + c6 The q-linear kind is parametrized here by r = q^{1/2} rather than q\\nitself. The structural constants of the theory live in the field generated\\nby q^{1/2}, so requiring r rational keeps every quantity in this book an\\nexact fraction with no field extension. #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::scalar::{int, rat}; // x(s) = (1/2) q^{-s} + (1/2) q^{s} with q = 4 (a symmetric q-lattice)\\nlet ql = Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap();\\nassert_eq!(ql.x_eval(&int(1)).unwrap(), rat(17, 8)); // q-linear lattices are evaluated at half-integers only,\\n// so q^s = r^{2s} stays rational\\nassert!(ql.x_eval(&rat(1, 2)).is_ok());\\nassert!(ql.x_eval(&rat(1, 3)).is_err()); // x(s) = 2s + 1 (a linear lattice, as a quadratic one with c4 = 0)\\nlet lin = Lattice::quadratic(int(0), int(2), int(1)).unwrap();\\nassert_eq!(lin.x_eval(&int(3)).unwrap(), int(7)); }","breadcrumbs":"Lattices and the Operators D and S » Lattices and the Operators D and S","id":"8","title":"Lattices and the Operators D and S"},"9":{"body":"Half-unit shifts of the argument obey one identity that drives everything\\nelse: x(s + 1/2) + x(s - 1/2) = 2 alpha x(s) + 2 beta with alpha = (r + 1/r)/2 and beta = (1 - alpha) c3 on q-linear\\nlattices, and alpha = 1, beta = c4/4 on quadratic ones. Two sequences\\nextend them: alpha_n = (r^n + r^{-n})/2 gamma_n = (r^n - r^{-n})/(r - 1/r) whose q -> 1 limits are alpha_n = 1 and gamma_n = n — the values the\\nquadratic kind uses directly. #![allow(unused)] fn main() {\\nuse oplattice::lattice::Lattice;\\nuse oplattice::scalar::{int, rat}; let ql = Lattice::q_linear(int(2), rat(1, 2), rat(1, 2), int(0)).unwrap();\\nassert_eq!(ql.alpha_n(2), rat(17, 8));\\nassert_eq!(ql.gamma_n(2), rat(5, 2)); let quad = Lattice::quadratic(int(1), int(0), int(0)).unwrap();\\nassert_eq!((quad.alpha_n(5), quad.gamma_n(5)), (int(1), int(5))); }","breadcrumbs":"Lattices and the Operators D and S » Structural constants","id":"9","title":"Structural constants"}},"docInfo":{"0":{"body":114,"breadcrumbs":2,"title":1},"1":{"body":36,"breadcrumbs":4,"title":3},"10":{"body":148,"breadcrumbs":8,"title":4},"11":{"body":54,"breadcrumbs":8,"title":4},"12":{"body":126,"breadcrumbs":5,"title":1},"13":{"body":91,"breadcrumbs":6,"title":2},"14":{"body":171,"breadcrumbs":7,"title":3},"15":{"body":19,"breadcrumbs":6,"title":3},"16":{"body":65,"breadcrumbs":5,"title":2},"17":{"body":61,"breadcrumbs":4,"title":1},"18":{"body":127,"breadcrumbs":6,"title":3},"19":{"body":117,"breadcrumbs":6,"title":3},"2":{"body":44,"breadcrumbs":3,"title":2},"20":{"body":170,"breadcrumbs":4,"title":1},"21":{"body":95,"breadcrumbs":6,"title":3},"22":{"body":130,"breadcrumbs":4,"title":1},"23":{"body":183,"breadcrumbs":4,"title":1},"24":{"body":101,"breadcrumbs":6,"title":3},"25":{"body":22,"breadcrumbs":5,"title":2},"26":{"body":27,"breadcrumbs":5,"title":2},"27":{"body":64,"breadcrumbs":4,"title":1},"28":{"body":72,"breadcrumbs":4,"title":1},"29":{"body":40,"breadcrumbs":5,"title":2},"3":{"body":54,"breadcrumbs":3,"title":2},"30":{"body":52,"breadcrumbs":4,"title":1},"4":{"body":6,"breadcrumbs":10,"title":5},"5":{"body":65,"breadcrumbs":6,"title":1},"6":{"body":84,"breadcrumbs":6,"title":1},"7":{"body":56,"breadcrumbs":7,"title":2},"8":{"body":110,"breadcrumbs":8,"title":4},"9":{"body":88,"breadcrumbs":6,"title":2}},"length":31},"lang":"English"}}'));