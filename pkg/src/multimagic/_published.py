"""Matrices transcribed verbatim from the published examples.

Each constant is a whitespace-separated block of rows; the catalog parses and
re-verifies them on load.
"""

EX1_B0 = """
 2 12  5 11
 9  7 14  0
15  1  8  6
 4 10  3 13
"""

EX1_B1 = """
 1 15  6  8
10  4 13  3
12  2 11  5
 7  9  0 14
"""

EX2_D = """
0 3 6 5 4 7 2 1
1 2 7 4 5 6 3 0
5 6 3 0 1 2 7 4
4 7 2 1 0 3 6 5
2 1 4 7 6 5 0 3
3 0 5 6 7 4 1 2
7 4 1 2 3 0 5 6
6 5 0 3 2 1 4 7
"""

PFEFFERMANN_8 = """
55 33  7 56 17 46  8 30
32 19 53 47  6 28 58  9
25 42 12 22 63 37  3 48
18  4 34 29 52 11 45 59
14 24 62  1 40 23 49 39
 5 54 16 10 35 57 31 44
60 15 41 51 26  0 38 21
43 61 27 36 13 50 20  2
"""

EX2_PGMS_32 = """
 2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8
 9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3
15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5
 4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14
 1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11
10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0
12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6
 7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13
 1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11
10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0
12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6
 7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13
 2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8
 9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3
15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5
 4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14
 2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8
 9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3
15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5
 4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14
 1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11
10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0
12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6
 7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13
 1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11
10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0
12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6
 7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13
 2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8  2 12  5 11  1 15  6  8
 9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3  9  7 14  0 10  4 13  3
15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5 15  1  8  6 12  2 11  5
 4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14  4 10  3 13  7  9  0 14
"""

EX2_C_32 = """
 882  892  885  891  529  543  534  536  114  124  117  123  897  911  902  904  274  284  277  283  737  751  742  744  130  140  133  139  481  495  486  488
 889  887  894  880  538  532  541  531  121  119  126  112  906  900  909  899  281  279  286  272  746  740  749  739  137  135  142  128  490  484  493  483
 895  881  888  886  540  530  539  533  127  113  120  118  908  898  907  901  287  273  280  278  748  738  747  741  143  129  136  134  492  482  491  485
 884  890  883  893  535  537  528  542  116  122  115  125  903  905  896  910  276  282  275  285  743  745  736  750  132  138  131  141  487  489  480  494
 513  527  518  520  306  316  309  315  849  863  854  856  754  764  757  763   97  111  102  104  450  460  453  459  929  943  934  936  146  156  149  155
 522  516  525  515  313  311  318  304  858  852  861  851  761  759  766  752  106  100  109   99  457  455  462  448  938  932  941  931  153  151  158  144
 524  514  523  517  319  305  312  310  860  850  859  853  767  753  760  758  108   98  107  101  463  449  456  454  940  930  939  933  159  145  152  150
 519  521  512  526  308  314  307  317  855  857  848  862  756  762  755  765  103  105   96  110  452  458  451  461  935  937  928  942  148  154  147  157
 401  415  406  408  674  684  677  683  193  207  198  200  354  364  357  363 1009 1023 1014 1016  594  604  597  603   49   63   54   56  770  780  773  779
 410  404  413  403  681  679  686  672  202  196  205  195  361  359  366  352 1018 1012 1021 1011  601  599  606  592   58   52   61   51  777  775  782  768
 412  402  411  405  687  673  680  678  204  194  203  197  367  353  360  358 1020 1010 1019 1013  607  593  600  598   60   50   59   53  783  769  776  774
 407  409  400  414  676  682  675  685  199  201  192  206  356  362  355  365 1015 1017 1008 1022  596  602  595  605   55   57   48   62  772  778  771  781
 290  300  293  299   65   79   70   72  546  556  549  555  465  479  470  472  834  844  837  843  177  191  182  184  722  732  725  731  945  959  950  952
 297  295  302  288   74   68   77   67  553  551  558  544  474  468  477  467  841  839  846  832  186  180  189  179  729  727  734  720  954  948  957  947
 303  289  296  294   76   66   75   69  559  545  552  550  476  466  475  469  847  833  840  838  188  178  187  181  735  721  728  726  956  946  955  949
 292  298  291  301   71   73   64   78  548  554  547  557  471  473  464  478  836  842  835  845  183  185  176  190  724  730  723  733  951  953  944  958
 226  236  229  235  385  399  390  392  994 1004  997 1003   17   31   22   24  642  652  645  651  369  383  374  376  786  796  789  795  625  639  630  632
 233  231  238  224  394  388  397  387 1001  999 1006  992   26   20   29   19  649  647  654  640  378  372  381  371  793  791  798  784  634  628  637  627
 239  225  232  230  396  386  395  389 1007  993 1000  998   28   18   27   21  655  641  648  646  380  370  379  373  799  785  792  790  636  626  635  629
 228  234  227  237  391  393  384  398  996 1002  995 1005   23   25   16   30  644  650  643  653  375  377  368  382  788  794  787  797  631  633  624  638
  81   95   86   88  866  876  869  875  257  271  262  264  162  172  165  171  561  575  566  568  914  924  917  923  497  511  502  504  706  716  709  715
  90   84   93   83  873  871  878  864  266  260  269  259  169  167  174  160  570  564  573  563  921  919  926  912  506  500  509  499  713  711  718  704
  92   82   91   85  879  865  872  870  268  258  267  261  175  161  168  166  572  562  571  565  927  913  920  918  508  498  507  501  719  705  712  710
  87   89   80   94  868  874  867  877  263  265  256  270  164  170  163  173  567  569  560  574  916  922  915  925  503  505  496  510  708  714  707  717
 961  975  966  968  242  252  245  251  657  671  662  664  818  828  821  827  417  431  422  424    2   12    5   11  609  623  614  616  338  348  341  347
 970  964  973  963  249  247  254  240  666  660  669  659  825  823  830  816  426  420  429  419    9    7   14    0  618  612  621  611  345  343  350  336
 972  962  971  965  255  241  248  246  668  658  667  661  831  817  824  822  428  418  427  421   15    1    8    6  620  610  619  613  351  337  344  342
 967  969  960  974  244  250  243  253  663  665  656  670  820  826  819  829  423  425  416  430    4   10    3   13  615  617  608  622  340  346  339  349
 690  700  693  699  977  991  982  984  434  444  437  443  577  591  582  584  210  220  213  219  801  815  806  808  322  332  325  331   33   47   38   40
 697  695  702  688  986  980  989  979  441  439  446  432  586  580  589  579  217  215  222  208  810  804  813  803  329  327  334  320   42   36   45   35
 703  689  696  694  988  978  987  981  447  433  440  438  588  578  587  581  223  209  216  214  812  802  811  805  335  321  328  326   44   34   43   37
 692  698  691  701  983  985  976  990  436  442  435  445  583  585  576  590  212  218  211  221  807  809  800  814  324  330  323  333   39   41   32   46
"""

EX4_A = """
1 3 0 2 4
2 4 1 3 0
3 0 2 4 1
4 1 3 0 2
0 2 4 1 3
"""

EX4_B = """
1 2 3 4 0
3 4 0 1 2
0 1 2 3 4
2 3 4 0 1
4 0 1 2 3
"""

EX4_K = """
4 1 3 0 2
0 1 2 3 4
2 4 1 3 0
"""

EX4_C0 = """
 6 18  0 12 24
10 22  9 16  3
19  1 13 20  7
23  5 17  4 11
 2 14 21  8 15
"""

EX4_C1 = """
 6 17  3 14 20
13 24  5 16  2
15  1 12 23  9
22  8 19  0 11
 4 10 21  7 18
"""

EX4_C2 = """
 9 16  3 10 22
13 20  7 19  1
17  4 11 23  5
21  8 15  2 14
 0 12 24  6 18
"""
